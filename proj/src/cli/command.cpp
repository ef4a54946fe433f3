#include <CLI11.hpp>

#include <charconv>
#include <sstream>

#include "mlf/cli.hpp"
#include "mlf/errors.hpp"

namespace mlf::cli {

std::string to_string(Verb verb) {
  switch (verb) {
    case Verb::eval: return "eval";
    case Verb::coeffs: return "coeffs";
    case Verb::classify: return "classify";
    case Verb::boundary: return "boundary";
    case Verb::matrix: return "matrix";
    case Verb::demo: return "demo";
    case Verb::bench: return "bench";
    case Verb::export_table: return "export-table";
  }
  return "?";
}

namespace {

// Raw option text; numbers are converted with from_chars so parsing does not
// depend on the C locale.
struct Raw {
  std::string alpha, beta, t, t_range, order, r, accuracy;
  std::string which, tol, t_scan;
  std::string method, matrix_file, demo_matrix, n;
  std::string problem, m, points_dir;
  std::string points, t_max, repetitions;
  std::string output, svg;
  std::vector<std::string> positional;
};

double to_double(const std::string& flag, const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw UsageError(flag + ": expected a number, got '" + text + "'");
  }
  return v;
}

int to_int(const std::string& flag, const std::string& text) {
  int v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw UsageError(flag + ": expected an integer, got '" + text + "'");
  }
  return v;
}

double alpha_value(const std::string& flag, const std::string& text) {
  const double a = to_double(flag, text);
  if (!(a > 1.0 && a <= 2.0)) throw UsageError(flag + ": alpha must lie in (1, 2], got " + text);
  return a;
}

double beta_value(const std::string& flag, const std::string& text) {
  const double b = to_double(flag, text);
  if (!(b >= 1.0)) throw UsageError(flag + ": beta must be >= 1, got " + text);
  return b;
}

double positive(const std::string& flag, const std::string& text) {
  const double v = to_double(flag, text);
  if (!(v > 0.0)) throw UsageError(flag + ": must be positive, got " + text);
  return v;
}

int at_least(const std::string& flag, const std::string& text, int lo) {
  const int v = to_int(flag, text);
  if (v < lo) throw UsageError(flag + ": must be >= " + std::to_string(lo) + ", got " + text);
  return v;
}

template <class F>
auto convert(const std::string& flag, F&& f) {
  try {
    return f();
  } catch (const mlf::Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

// Required flags are checked after value validation, so a bad value is
// reported before a missing flag.
void add_params(CLI::App* sub, Raw& raw) {
  sub->add_option("--alpha", raw.alpha, "alpha in (1, 2] (required)");
  sub->add_option("--beta", raw.beta, "beta >= 1");
}

void require(bool present, const std::string& verb, const std::string& flag) {
  if (!present) throw UsageError(verb + ": " + flag + " is required");
}

void add_order(CLI::App* sub, Raw& raw) { sub->add_option("--order", raw.order, "Pade order 7,2 or 13,4 (default 13,4)"); }

}  // namespace

Command parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Mittag-Leffler function evaluation with global Pade approximants", "mlf"};
  app.require_subcommand(1);
  Raw raw;
  bool use_oracle = false, compare = false, recompute = false, reference = false;

  auto* eval = app.add_subcommand("eval", "evaluate E_{alpha,beta}(-t)");
  add_params(eval, raw);
  add_order(eval, raw);
  eval->add_option("--t", raw.t, "argument t >= 0");
  eval->add_option("--t-range", raw.t_range, "CSV over a:step:b");
  eval->add_option("--r", raw.r, "derooting order or 'auto' (default 0)");
  eval->add_flag("--oracle", use_oracle, "use the reference evaluator instead of the approximant");
  eval->add_flag("--compare", compare, "add oracle and relative-error columns");
  eval->add_option("--accuracy", raw.accuracy, "oracle accuracy (default 1e-14)");
  eval->add_option("--svg", raw.svg, "also plot to this SVG (data in a sibling CSV)");

  auto* coeffs = app.add_subcommand("coeffs", "dump approximant coefficients, poles and residues as CSV");
  add_params(coeffs, raw);
  add_order(coeffs, raw);

  auto* classify = app.add_subcommand("classify", "region label of (alpha, beta) and its phi/psi thresholds");
  classify->add_option("params", raw.positional, "alpha beta")->expected(0, 2);
  classify->add_option("--alpha", raw.alpha, "alpha in (1, 2]");
  classify->add_option("--beta", raw.beta, "beta >= 1");

  auto* boundary = app.add_subcommand("boundary", "stored and recomputed phi/psi boundaries");
  boundary->add_option("--alpha", raw.alpha, "alpha in (1, 2] (required)");
  boundary->add_option("--which", raw.which, "phi or psi (default both)");
  boundary->add_flag("--recompute", recompute, "recompute by root scanning");
  boundary->add_option("--tol", raw.tol, "bisection tolerance (default 1e-3)");
  boundary->add_option("--t-scan", raw.t_scan, "root scan range (default 100)");

  auto* matrix = app.add_subcommand("matrix", "evaluate the approximant at a matrix argument");
  add_params(matrix, raw);
  add_order(matrix, raw);
  matrix->add_option("--r", raw.r, "derooting order (default 0)");
  matrix->add_option("--method", raw.method, "inversion, linear-solve, partial-fraction (default), diagonalization");
  matrix->add_option("--matrix-file", raw.matrix_file, "matrix in text format");
  matrix->add_option("--demo", raw.demo_matrix, "built-in matrix: redheffer");
  matrix->add_option("--n", raw.n, "built-in matrix size (default 100)");
  matrix->add_flag("--reference", reference, "compare with the reference matrix function");
  matrix->add_option("--accuracy", raw.accuracy, "reference accuracy (default 1e-14)");
  matrix->add_option("--output", raw.output, "write the result matrix here");

  auto* demo = app.add_subcommand("demo", "plasma-static, plasma-free or wave: error report vs the oracle");
  demo->add_option("problem", raw.problem, "plasma-static, plasma-free or wave")->required();
  demo->add_option("--alpha", raw.alpha, "alpha in (1, 2] (default 1.9)");
  add_order(demo, raw);
  demo->add_option("--r", raw.r, "derooting orders, comma separated");
  demo->add_option("--t-range", raw.t_range, "mesh a:step:b");
  demo->add_option("--m", raw.m, "wave: interior nodes (default 99)");
  demo->add_option("--method", raw.method, "wave: matrix method (default diagonalization)");
  demo->add_option("--points-dir", raw.points_dir, "write per-point CSV files here");
  demo->add_option("--repetitions", raw.repetitions, "timing repetitions (default 5)");
  demo->add_option("--svg", raw.svg, "also plot to this SVG (data in a sibling CSV)");

  auto* bench = app.add_subcommand("bench", "runtime of approximants against the reference evaluators");
  bench->add_option("--alpha", raw.alpha, "alpha in (1, 2] (default 1.9)");
  bench->add_option("--beta", raw.beta, "beta >= 1 (default 1)");
  add_order(bench, raw);
  bench->add_option("--r", raw.r, "derooting order (default 0)");
  bench->add_option("--points", raw.points, "scalar points (default 1000)");
  bench->add_option("--t-max", raw.t_max, "scalar points span (0, t-max] (default 20)");
  bench->add_option("--accuracy", raw.accuracy, "oracle accuracy (default 1e-10)");
  bench->add_option("--n", raw.n, "Redheffer size (default 100)");
  bench->add_option("--method", raw.method, "matrix method (default partial-fraction)");
  bench->add_option("--repetitions", raw.repetitions, "timing repetitions (default 5)");

  auto* table = app.add_subcommand("export-table", "the shipped phi/psi table as CSV");
  table->add_option("--output", raw.output, "write to this file instead of standard output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    throw HelpRequested(out.str());
  } catch (const CLI::CallForAllHelp& e) {
    std::ostringstream out, err;
    app.exit(e, out, err);
    throw HelpRequested(out.str());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Command cmd;
  const CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  for (Verb v : {Verb::eval, Verb::coeffs, Verb::classify, Verb::boundary, Verb::matrix, Verb::demo, Verb::bench,
                 Verb::export_table}) {
    if (name == to_string(v)) cmd.verb = v;
  }
  cmd.use_oracle = use_oracle;
  cmd.compare = compare;
  cmd.recompute = recompute;
  cmd.reference = reference;

  if (cmd.verb == Verb::classify) {
    if (raw.positional.size() == 2) {
      if (!raw.alpha.empty() || !raw.beta.empty()) throw UsageError("classify: give alpha and beta once");
      raw.alpha = raw.positional[0];
      raw.beta = raw.positional[1];
    } else if (!raw.positional.empty()) {
      throw UsageError("classify: expected two positional values, alpha and beta");
    }
    if (raw.alpha.empty() || raw.beta.empty()) throw UsageError("classify: alpha and beta are required");
  }
  if (!raw.alpha.empty()) cmd.alpha = alpha_value("--alpha", raw.alpha);
  if (!raw.beta.empty()) cmd.beta = beta_value("--beta", raw.beta);
  if (!raw.order.empty()) cmd.order = convert("--order", [&] { return parse_pade_order(raw.order); });
  if (!raw.t.empty()) {
    cmd.t = to_double("--t", raw.t);
    if (!(*cmd.t >= 0.0)) throw UsageError("--t: must be >= 0, got " + raw.t);
  }
  if (!raw.t_range.empty()) cmd.t_range = convert("--t-range", [&] { return parse_time_mesh(raw.t_range); });
  if (!raw.accuracy.empty()) cmd.accuracy = positive("--accuracy", raw.accuracy);
  else if (cmd.verb == Verb::bench) cmd.accuracy = 1e-10;
  if (!raw.which.empty()) cmd.which = convert("--which", [&] { return parse_boundary(raw.which); });
  if (!raw.tol.empty()) cmd.tol = positive("--tol", raw.tol);
  if (!raw.t_scan.empty()) cmd.t_scan = positive("--t-scan", raw.t_scan);
  if (!raw.method.empty()) cmd.method = convert("--method", [&] { return parse_matrix_method(raw.method); });
  else if (cmd.verb == Verb::demo) cmd.method = MatrixMethod::Diagonalization;
  if (!raw.matrix_file.empty()) cmd.matrix_file = raw.matrix_file;
  if (!raw.n.empty()) cmd.n = at_least("--n", raw.n, 1);
  if (!raw.problem.empty()) cmd.problem = convert("problem", [&] { return parse_problem(raw.problem); });
  if (!raw.m.empty()) cmd.m = at_least("--m", raw.m, 1);
  if (!raw.points_dir.empty()) cmd.points_dir = raw.points_dir;
  if (!raw.points.empty()) cmd.points = at_least("--points", raw.points, 1);
  if (!raw.t_max.empty()) cmd.t_max = positive("--t-max", raw.t_max);
  if (!raw.repetitions.empty()) cmd.repetitions = at_least("--repetitions", raw.repetitions, 1);
  if (!raw.output.empty()) cmd.output = raw.output;
  if (!raw.svg.empty()) cmd.svg = raw.svg;

  if (cmd.verb == Verb::demo) {
    std::size_t pos = 0;
    while (!raw.r.empty() && pos <= raw.r.size()) {
      const std::size_t end = std::min(raw.r.find(',', pos), raw.r.size());
      cmd.r_list.push_back(at_least("--r", raw.r.substr(pos, end - pos), 0));
      pos = end + 1;
    }
  } else if (raw.r == "auto") {
    if (cmd.verb != Verb::eval) throw UsageError("--r: 'auto' is only available for eval");
    cmd.r.reset();
  } else {
    cmd.r = raw.r.empty() ? 0 : at_least("--r", raw.r, 0);
  }

  const std::string verb = to_string(cmd.verb);
  if (cmd.verb == Verb::eval || cmd.verb == Verb::coeffs || cmd.verb == Verb::matrix ||
      cmd.verb == Verb::boundary) {
    require(!raw.alpha.empty(), verb, "--alpha");
  }
  if (cmd.verb == Verb::eval || cmd.verb == Verb::coeffs) require(!raw.beta.empty(), verb, "--beta");

  switch (cmd.verb) {
    case Verb::eval:
      if (cmd.t.has_value() == cmd.t_range.has_value()) throw UsageError("eval: give exactly one of --t, --t-range");
      if (cmd.use_oracle && cmd.compare) throw UsageError("eval: --oracle and --compare exclude each other");
      if (cmd.svg && !cmd.t_range) throw UsageError("--svg: needs --t-range");
      break;
    case Verb::matrix:
      if (cmd.matrix_file.has_value() == !raw.demo_matrix.empty()) {
        throw UsageError("matrix: give exactly one of --matrix-file, --demo");
      }
      if (!raw.demo_matrix.empty() && raw.demo_matrix != "redheffer") {
        throw UsageError("--demo: unknown matrix '" + raw.demo_matrix + "' (expected redheffer)");
      }
      break;
    default:
      break;
  }
  return cmd;
}

}  // namespace mlf::cli
