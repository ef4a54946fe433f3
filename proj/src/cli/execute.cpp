#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>

#include "mlf/bench.hpp"
#include "mlf/cli.hpp"
#include "mlf/errors.hpp"
#include "mlf/oracle.hpp"

namespace mlf::cli {

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IOError("cannot write " + path.string());
  return out;
}

int resolve_r(const Command& cmd, std::ostream& err) {
  if (cmd.r) return *cmd.r;
  const MLParams params{cmd.alpha, cmd.beta};
  const SelectionMode mode = cmd.t_range ? SelectionMode(HorizonMode{cmd.t_range->t_end}) : BoundaryMode{};
  const int r = select_r(params, cmd.order, BoundaryTable::embedded(), mode);
  err << "selected r = " << r << (cmd.t_range ? " (horizon mode)" : " (boundary mode)") << '\n';
  return r;
}

void run_eval(const Command& cmd, std::ostream& out, std::ostream& err) {
  const MLParams params{cmd.alpha, cmd.beta};
  const std::vector<double> ts = cmd.t_range ? cmd.t_range->points() : std::vector<double>{*cmd.t};
  const double t_top = ts.back();
  std::optional<DerootedApproximant> approx;
  if (!cmd.use_oracle) approx = build_derooted(params, cmd.order, resolve_r(cmd, err));
  std::optional<MlfOracle> oracle;
  if (cmd.use_oracle || cmd.compare) oracle.emplace(params, std::max(t_top, 1.0), cmd.accuracy);

  if (!cmd.t_range && !cmd.compare) {
    out << format_csv(approx ? eval_derooted(*approx, ts[0]) : oracle->negative(ts[0]).value) << '\n';
    return;
  }
  Series approx_series{cmd.use_oracle ? "oracle" : "approximant", {}};
  Series oracle_series{"oracle", {}};
  out << (cmd.compare ? "t,approx,oracle,rel_err\n" : "t,value\n");
  for (double t : ts) {
    if (cmd.compare) {
      const double a = eval_derooted(*approx, t);
      const double o = oracle->negative(t).value;
      out << format_csv(t) << ',' << format_csv(a) << ',' << format_csv(o) << ',' << format_csv(relative_error(a, o))
          << '\n';
      approx_series.points.emplace_back(t, a);
      oracle_series.points.emplace_back(t, o);
    } else {
      const double v = approx ? eval_derooted(*approx, t) : oracle->negative(t).value;
      out << format_csv(t) << ',' << format_csv(v) << '\n';
      approx_series.points.emplace_back(t, v);
    }
  }
  if (cmd.svg) {
    std::vector<Series> series{approx_series};
    if (cmd.compare) series.push_back(oracle_series);
    emit_svg(series, *cmd.svg);
  }
}

void run_classify(const Command& cmd, std::ostream& out) {
  const BoundaryTable& table = BoundaryTable::embedded();
  out << to_string(classify_region({cmd.alpha, cmd.beta}, table)) << '\n';
  out << "phi=" << format_human(boundary_lookup(table, cmd.alpha, Boundary::phi)) << '\n';
  out << "psi=" << format_human(boundary_lookup(table, cmd.alpha, Boundary::psi)) << '\n';
}

void run_boundary(const Command& cmd, std::ostream& out) {
  const BoundaryTable& table = BoundaryTable::embedded();
  std::vector<Boundary> which;
  if (cmd.which) which.push_back(*cmd.which);
  else which = {Boundary::phi, Boundary::psi};
  BoundaryOptions options;
  options.t_scan = cmd.t_scan;
  out << (cmd.recompute ? "alpha,which,stored,recomputed\n" : "alpha,which,stored\n");
  for (Boundary b : which) {
    out << format_csv(cmd.alpha) << ',' << to_string(b) << ',' << format_csv(boundary_lookup(table, cmd.alpha, b));
    if (cmd.recompute) out << ',' << format_csv(compute_boundary(cmd.alpha, b, cmd.tol, options));
    out << '\n';
  }
}

void run_matrix(const Command& cmd, std::ostream& out) {
  const DenseMatrix a = cmd.matrix_file ? read_matrix_file(*cmd.matrix_file) : redheffer(cmd.n);
  const MLParams params{cmd.alpha, cmd.beta};
  const DerootedApproximant d = build_derooted(params, cmd.order, *cmd.r);
  const auto start = std::chrono::steady_clock::now();
  const DenseMatrix result = eval_matrix_derooted(d, a, cmd.method);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << "method " << to_string(cmd.method) << '\n';
  out << "size " << a.rows() << '\n';
  out << "runtime_s " << format_human(seconds) << '\n';
  if (cmd.reference) {
    const MatrixReference ref = matrix_reference_report(params, a, cmd.accuracy);
    double ae = 0.0, re = 0.0;
    for (std::size_t k = 0; k < result.data().size(); ++k) {
      const double e = std::abs(result.data()[k] - ref.value.data()[k]);
      ae = std::max(ae, e);
      if (ref.value.data()[k] != 0.0) re = std::max(re, e / std::abs(ref.value.data()[k]));
    }
    out << "reference " << (ref.diagonalized ? "diagonalization" : "taylor") << '\n';
    out << "eigenbasis_cond " << format_human(ref.eigenbasis_condition) << '\n';
    out << "max_abs_err " << format_human(ae) << '\n';
    out << "max_rel_err " << format_human(re) << '\n';
    out << "frobenius_rel_err " << format_human(relative_frobenius(result, ref.value)) << '\n';
  }
  if (cmd.output) {
    std::ofstream f = open_output(*cmd.output);
    write_matrix(f, result);
    if (!f) throw IOError("cannot write " + cmd.output->string());
  }
}

void run_demo(const Command& cmd, std::ostream& out, std::ostream& err) {
  TimeMesh mesh = cmd.problem == Problem::Wave ? TimeMesh{0.0, 10.0, 100}
                  : cmd.problem == Problem::PlasmaStatic ? TimeMesh{0.0, 17.0, 100}
                                                         : TimeMesh{0.0, 20.0, 200};
  if (cmd.t_range) mesh = *cmd.t_range;
  std::vector<int> rs = cmd.r_list;
  if (rs.empty()) {
    rs = cmd.problem == Problem::Wave ? std::vector<int>{0, 2}
         : cmd.problem == Problem::PlasmaStatic ? std::vector<int>{0, 2, 5, 8}
                                                : std::vector<int>{15};
  }
  std::vector<Backend> backends;
  for (int r : rs) backends.push_back(DerootedBackend{cmd.order, r});
  ErrorTableOptions options;
  options.wave_m = cmd.m;
  options.method = cmd.method;
  options.repetitions = cmd.repetitions;
  options.reference_accuracy = cmd.accuracy;
  const auto reports = error_table(cmd.problem, cmd.alpha, mesh, backends, options);

  out << "backend,max_rel_err,runtime_s\n";
  for (const auto& rep : reports) {
    out << rep.backend << ',' << format_csv(rep.max_relative_error) << ',' << format_csv(rep.runtime_seconds) << '\n';
    if (rep.excluded_points > 0) {
      err << rep.backend << ": " << rep.excluded_points << " points excluded near roots, max abs error "
          << format_human(rep.excluded_max_abs_error) << '\n';
    }
  }
  if (cmd.points_dir) {
    std::filesystem::create_directories(*cmd.points_dir);
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto path = *cmd.points_dir / (to_string(cmd.problem) + "_r" + std::to_string(rs[i]) + ".csv");
      std::ofstream f = open_output(path);
      f << "t,approx,reference,rel_err\n";
      for (const auto& p : reports[i].per_point) {
        f << format_csv(p.t) << ',' << format_csv(p.approx) << ',' << format_csv(p.reference) << ','
          << format_csv(p.rel_err) << '\n';
      }
      if (!f) throw IOError("cannot write " + path.string());
    }
  }
  if (cmd.svg) {
    std::vector<Series> series;
    if (cmd.problem == Problem::Wave) {
      for (const auto& rep : reports) {
        Series s{rep.backend + " rel. error", {}};
        for (const auto& p : rep.per_point) s.points.emplace_back(p.t, p.rel_err);
        series.push_back(std::move(s));
      }
    } else {
      Series ref{"oracle", {}};
      for (const auto& p : reports.front().per_point) ref.points.emplace_back(p.t, p.reference);
      series.push_back(std::move(ref));
      for (const auto& rep : reports) {
        Series s{rep.backend, {}};
        for (const auto& p : rep.per_point) s.points.emplace_back(p.t, p.approx);
        series.push_back(std::move(s));
      }
    }
    emit_svg(series, *cmd.svg);
  }
}

void run_bench(const Command& cmd, std::ostream& out) {
  const MLParams params{cmd.alpha, cmd.beta};
  const BenchResult scalar = bench_scalar(params, cmd.order, *cmd.r, cmd.points, cmd.t_max, cmd.accuracy,
                                          cmd.repetitions);
  const BenchResult matrix = bench_matrix(params, cmd.order, redheffer(cmd.n), cmd.method, 1e-12, cmd.repetitions);
  out << "case,approx_s,reference_s,speedup\n";
  for (const BenchResult& b : {scalar, matrix}) {
    out << b.name << ',' << format_csv(b.approx_seconds) << ',' << format_csv(b.reference_seconds) << ','
        << format_csv(b.speedup()) << '\n';
  }
}

}  // namespace

void execute(const Command& cmd, std::ostream& out, std::ostream& err) {
  switch (cmd.verb) {
    case Verb::eval: return run_eval(cmd, out, err);
    case Verb::coeffs: out << coeffs_csv(build_pade({cmd.alpha, cmd.beta}, cmd.order)); return;
    case Verb::classify: return run_classify(cmd, out);
    case Verb::boundary: return run_boundary(cmd, out);
    case Verb::matrix: return run_matrix(cmd, out);
    case Verb::demo: return run_demo(cmd, out, err);
    case Verb::bench: return run_bench(cmd, out);
    case Verb::export_table: {
      const std::string csv = BoundaryTable::embedded().to_csv();
      if (!cmd.output) {
        out << csv;
        return;
      }
      std::ofstream f = open_output(*cmd.output);
      f << csv;
      if (!f) throw IOError("cannot write " + cmd.output->string());
      return;
    }
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.what();
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nrun with --help for usage\n";
    return 2;
  }
  try {
    execute(cmd, out, err);
  } catch (const mlf::Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace mlf::cli
