#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mlf/apps.hpp"
#include "mlf/boundary.hpp"
#include "mlf/matrix.hpp"
#include "mlf/pade.hpp"

namespace mlf::cli {

/// Bad command line; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was given; carries the verb-specific usage text (exit code 0).
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Verb { eval, coeffs, classify, boundary, matrix, demo, bench, export_table };
std::string to_string(Verb verb);

/// Typed options; each verb reads its own subset.
struct Command {
  Verb verb = Verb::eval;

  double alpha = 1.9;
  double beta = 1.0;
  PadeOrder order = PadeOrder::k13_4;
  std::optional<int> r;  ///< empty: auto selection
  std::optional<double> t;
  std::optional<TimeMesh> t_range;
  bool use_oracle = false;  ///< eval: oracle instead of the approximant
  bool compare = false;     ///< eval: add oracle and relative-error columns
  double accuracy = 1e-14;  ///< oracle accuracy for references

  std::optional<Boundary> which;
  bool recompute = false;
  double tol = 1e-3;
  double t_scan = 100.0;

  MatrixMethod method = MatrixMethod::PartialFraction;
  std::optional<std::filesystem::path> matrix_file;
  int n = 100;
  bool reference = false;

  Problem problem = Problem::PlasmaStatic;
  std::vector<int> r_list;  ///< demo backends; empty: problem default
  int m = 99;
  std::optional<std::filesystem::path> points_dir;

  int points = 1000;
  double t_max = 20.0;
  int repetitions = 5;

  std::optional<std::filesystem::path> output;
  std::optional<std::filesystem::path> svg;
};

/// argv without the program name. Throws UsageError (offending flag named)
/// or HelpRequested.
Command parse_args(const std::vector<std::string>& args);

/// Runs a parsed command; module errors propagate.
void execute(const Command& cmd, std::ostream& out, std::ostream& err);

/// parse_args + execute with exit-code mapping: 0 ok, 1 computational
/// error (one-line diagnostic on err), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 17 significant digits, '.' decimal separator, shortest exponent form.
std::string format_csv(double v);
/// 6 significant digits.
std::string format_human(double v);

/// Coefficient dump: header "role,degree,value"; roles prefactor, num, den,
/// pole_re, pole_im, res_re, res_im.
std::string coeffs_csv(const RationalApproximant& approx);
/// Rebuilds prefactor and coefficients from coeffs_csv output.
RationalApproximant parse_coeffs_csv(std::istream& in);

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

/// Standalone SVG line chart (linear axes, legend, one polyline per series)
/// plus the data as CSV "series,x,y" next to it (same stem, .csv). Throws
/// DomainError on empty input, IOError when a file cannot be written.
void emit_svg(const std::vector<Series>& series, const std::filesystem::path& path);

}  // namespace mlf::cli
