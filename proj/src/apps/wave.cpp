#include <cmath>
#include <numbers>

#include "mlf/apps.hpp"
#include "mlf/errors.hpp"

namespace mlf {

DenseMatrix wave_system_matrix(int m, bool scaled) {
  if (m < 1) throw DomainError("wave system size m must be >= 1");
  const double h = std::numbers::pi / (m + 1);
  const double s = scaled ? 1.0 / (h * h) : 1.0;
  DenseMatrix a(m, m);
  for (int i = 0; i < m; ++i) {
    a(i, i) = 2.0 * s;
    if (i > 0) a(i, i - 1) = -s;
    if (i + 1 < m) a(i, i + 1) = -s;
  }
  return a;
}

std::vector<double> wave_nodes(int m) {
  if (m < 1) throw DomainError("wave system size m must be >= 1");
  const double h = std::numbers::pi / (m + 1);
  std::vector<double> x(m);
  for (int i = 0; i < m; ++i) x[i] = (i + 1) * h;
  return x;
}

std::vector<double> wave_initial(int m) {
  std::vector<double> u = wave_nodes(m);
  for (double& v : u) v = std::sin(v);
  return u;
}

namespace {

double spectral_radius(const EigenDecomposition& e) {
  double r = 0.0;
  for (const auto& l : e.eigenvalues) r = std::max(r, std::abs(l));
  return r;
}

}  // namespace

WaveSolution::WaveSolution(double alpha, int m, const Backend& backend, MatrixMethod method, double t_max)
    : alpha_(alpha),
      m_(m),
      method_(method),
      backend_(backend),
      a_(wave_system_matrix(m)),
      u0_(wave_initial(m)),
      eig_(eigendecompose(a_)),
      scalar_({alpha, 1.0}, backend, spectral_radius(eig_) * std::pow(t_max, alpha)) {
  if (!(alpha > 1.0 && alpha <= 2.0)) throw DomainError("alpha must lie in (1, 2]");
  if (const auto* d = std::get_if<DerootedBackend>(&backend); d && method != MatrixMethod::Diagonalization) {
    derooted_ = build_derooted({alpha, 1.0}, d->order, d->r);
  }
}

std::vector<double> WaveSolution::operator()(double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("time must be finite and >= 0");
  const double s = std::pow(t, alpha_);
  if (!derooted_) {
    return apply_function(eig_, [&](std::complex<double> l) { return std::complex<double>(scalar_(l.real() * s)); },
                          u0_);
  }
  return eval_matrix_derooted(*derooted_, s * a_, method_) * u0_;
}

std::vector<double> wave_solution(double alpha, double t, int m, const Backend& backend, MatrixMethod method) {
  return WaveSolution(alpha, m, backend, method, t)(t);
}

}  // namespace mlf
