#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mlf/dense.hpp"
#include "mlf/derooted.hpp"
#include "mlf/matrix.hpp"
#include "mlf/oracle.hpp"

namespace mlf {

struct OracleBackend {
  double accuracy = 1e-14;
};
struct DerootedBackend {
  PadeOrder order = PadeOrder::k13_4;
  int r = 0;
};
/// How E_{alpha,beta}(-x) is evaluated inside a solution formula.
using Backend = std::variant<OracleBackend, DerootedBackend>;

/// "oracle" or "R13/4 r=8" (no commas, so it can sit in a CSV field)
std::string describe(const Backend& backend);

/// E_{alpha,beta}(-x) through a backend; the approximant (or the oracle
/// coefficient table, sized for x up to x_max) is built once.
class MlfEvaluator {
 public:
  MlfEvaluator(const MLParams& params, const Backend& backend, double x_max);
  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> x) const;

 private:
  std::variant<MlfOracle, DerootedApproximant> impl_;
};

/// c-D^alpha u + u = 1, u(0) = 1, u'(0) = -1:
///   u(t) = E_alpha(-t^alpha) - t E_{alpha,2}(-t^alpha) + t^alpha E_{alpha,alpha+1}(-t^alpha)
double plasma_static_solution(double alpha, double t, const Backend& backend);
/// c-D^alpha u + u = 0, u(0) = 0.2, u'(0) = 0.1:
///   u(t) = 0.2 E_alpha(-t^alpha) + 0.1 t E_{alpha,2}(-t^alpha)
double plasma_nofield_solution(double alpha, double t, const Backend& backend);

enum class Problem { PlasmaStatic, PlasmaNoField, Wave };
/// "plasma-static", "plasma-free", "wave"
std::string to_string(Problem problem);
Problem parse_problem(std::string_view text);

/// Either plasma solution with its MLF evaluators built once for t <= t_max.
class PlasmaSolution {
 public:
  PlasmaSolution(Problem problem, double alpha, const Backend& backend, double t_max);
  double operator()(double t) const;

 private:
  Problem problem_;
  double alpha_;
  MlfEvaluator e1_;  // beta = 1
  MlfEvaluator e2_;  // beta = 2
  std::optional<MlfEvaluator> e3_;  // beta = alpha + 1, static field only
};

/// m x m tridiag(-1, 2, -1), divided by h^2 (h = pi/(m+1)) when scaled.
DenseMatrix wave_system_matrix(int m, bool scaled = true);
/// x_i = i h, i = 1..m
std::vector<double> wave_nodes(int m);
/// sin(x_i)
std::vector<double> wave_initial(int m);

/// U(t) = E_alpha(-A t^alpha) U_0 for the semi-discretized diffusion-wave
/// problem. Diagonalization reuses one eigendecomposition of A for every t;
/// the oracle backend always evaluates per eigenvalue.
class WaveSolution {
 public:
  WaveSolution(double alpha, int m, const Backend& backend, MatrixMethod method = MatrixMethod::Diagonalization,
               double t_max = 10.0);
  std::vector<double> operator()(double t) const;
  int size() const { return m_; }

 private:
  double alpha_;
  int m_;
  MatrixMethod method_;
  Backend backend_;
  DenseMatrix a_;
  std::vector<double> u0_;
  EigenDecomposition eig_;
  MlfEvaluator scalar_;
  std::optional<DerootedApproximant> derooted_;
};

std::vector<double> wave_solution(double alpha, double t, int m, const Backend& backend,
                                  MatrixMethod method = MatrixMethod::Diagonalization);

/// Uniform mesh t0, t0 + dt, ..., t_end with dt = (t_end - t0)/steps.
struct TimeMesh {
  double t0 = 0.0;
  double t_end = 1.0;
  int steps = 1;

  /// Throws DomainError unless steps >= 1, t0 >= 0 and t_end > t0.
  void validate() const;
  double at(int i) const;
  std::vector<double> points() const;
};
/// "a:step:b"; steps is rounded from (b - a)/step.
TimeMesh parse_time_mesh(std::string_view text);

struct PointError {
  double t = 0.0;
  double approx = 0.0;
  double reference = 0.0;
  double rel_err = 0.0;
  bool excluded = false;  ///< reference below the exclusion level
};

/// Relative errors are |approx - ref| / |ref| at points with
/// |ref| > exclusion * max |ref| over the mesh; the other points only
/// contribute to excluded_max_abs_error. For the wave problem each mesh time
/// reports the node with the largest relative error.
struct ErrorReport {
  std::string backend;
  double max_relative_error = 0.0;
  double max_abs_error = 0.0;
  double runtime_seconds = 0.0;  ///< median wall clock, approximant only
  int excluded_points = 0;
  double excluded_max_abs_error = 0.0;
  std::vector<PointError> per_point;
};

struct ErrorTableOptions {
  int wave_m = 99;
  MatrixMethod method = MatrixMethod::Diagonalization;
  double reference_accuracy = 1e-14;
  double exclusion = 1e-3;
  int repetitions = 5;
  bool keep_per_point = true;
};

/// One report per backend against the oracle solution on the mesh. Runtime
/// covers building the solution and evaluating it over the mesh.
std::vector<ErrorReport> error_table(Problem problem, double alpha, const TimeMesh& mesh,
                                     const std::vector<Backend>& backends, const ErrorTableOptions& options = {});

}  // namespace mlf
