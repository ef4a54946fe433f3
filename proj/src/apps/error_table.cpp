#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>

#include "mlf/apps.hpp"
#include "mlf/errors.hpp"

namespace mlf {

void TimeMesh::validate() const {
  if (steps < 1) throw DomainError("time mesh needs at least one step");
  if (!(t0 >= 0.0) || !(t_end > t0) || !std::isfinite(t_end)) {
    throw DomainError("time mesh needs 0 <= t0 < t_end");
  }
}

double TimeMesh::at(int i) const {
  if (i == steps) return t_end;
  return t0 + (t_end - t0) * i / steps;
}

std::vector<double> TimeMesh::points() const {
  validate();
  std::vector<double> out(steps + 1);
  for (int i = 0; i <= steps; ++i) out[i] = at(i);
  return out;
}

TimeMesh parse_time_mesh(std::string_view text) {
  double v[3];
  std::size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    const std::size_t end = k < 2 ? text.find(':', pos) : text.size();
    if (end == std::string_view::npos) throw DomainError("time range must be a:step:b");
    const std::string_view part = text.substr(pos, end - pos);
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v[k]);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw DomainError("malformed number '" + std::string(part) + "' in time range");
    }
    pos = end + 1;
  }
  if (!(v[1] > 0.0)) throw DomainError("time range step must be positive");
  const double span = v[2] - v[0];
  const double steps = std::round(span / v[1]);
  if (std::abs(steps * v[1] - span) > 1e-9 * std::max(1.0, std::abs(span))) {
    throw DomainError("time range step does not divide the interval");
  }
  TimeMesh mesh{v[0], v[2], static_cast<int>(steps)};
  mesh.validate();
  return mesh;
}

namespace {

using Clock = std::chrono::steady_clock;

// Nodal values of the problem's solution at every mesh point.
std::vector<std::vector<double>> solve_on_mesh(Problem problem, double alpha, const std::vector<double>& times,
                                               const Backend& backend, const ErrorTableOptions& options) {
  std::vector<std::vector<double>> out;
  out.reserve(times.size());
  if (problem == Problem::Wave) {
    const WaveSolution sol(alpha, options.wave_m, backend, options.method, times.back());
    for (double t : times) out.push_back(sol(t));
  } else {
    const PlasmaSolution sol(problem, alpha, backend, times.back());
    for (double t : times) out.push_back({sol(t)});
  }
  return out;
}

ErrorReport compare(const std::vector<double>& times, const std::vector<std::vector<double>>& approx,
                    const std::vector<std::vector<double>>& ref, double exclusion, bool keep_per_point) {
  double ref_max = 0.0;
  for (const auto& row : ref)
    for (double v : row) ref_max = std::max(ref_max, std::abs(v));
  const double level = exclusion * ref_max;

  ErrorReport rep;
  for (std::size_t k = 0; k < times.size(); ++k) {
    PointError worst{times[k], approx[k][0], ref[k][0], 0.0, true};
    double worst_excluded = -1.0;
    for (std::size_t i = 0; i < ref[k].size(); ++i) {
      const double err = std::abs(approx[k][i] - ref[k][i]);
      rep.max_abs_error = std::max(rep.max_abs_error, err);
      if (std::abs(ref[k][i]) <= level) {
        ++rep.excluded_points;
        rep.excluded_max_abs_error = std::max(rep.excluded_max_abs_error, err);
        if (worst.excluded && err > worst_excluded) {
          worst_excluded = err;
          worst = {times[k], approx[k][i], ref[k][i], err / std::abs(ref[k][i]), true};
        }
        continue;
      }
      const double rel = err / std::abs(ref[k][i]);
      if (worst.excluded || rel > worst.rel_err) worst = {times[k], approx[k][i], ref[k][i], rel, false};
    }
    if (!worst.excluded) rep.max_relative_error = std::max(rep.max_relative_error, worst.rel_err);
    if (keep_per_point) rep.per_point.push_back(worst);
  }
  return rep;
}

}  // namespace

std::vector<ErrorReport> error_table(Problem problem, double alpha, const TimeMesh& mesh,
                                     const std::vector<Backend>& backends, const ErrorTableOptions& options) {
  const std::vector<double> times = mesh.points();
  if (options.repetitions < 1) throw DomainError("repetitions must be >= 1");
  const auto ref = solve_on_mesh(problem, alpha, times, OracleBackend{options.reference_accuracy}, options);

  std::vector<ErrorReport> out;
  for (const Backend& backend : backends) {
    std::vector<double> runtimes;
    std::vector<std::vector<double>> approx;
    for (int rep = 0; rep < options.repetitions; ++rep) {
      const auto start = Clock::now();
      approx = solve_on_mesh(problem, alpha, times, backend, options);
      runtimes.push_back(std::chrono::duration<double>(Clock::now() - start).count());
    }
    std::sort(runtimes.begin(), runtimes.end());
    ErrorReport report = compare(times, approx, ref, options.exclusion, options.keep_per_point);
    report.backend = describe(backend);
    report.runtime_seconds = runtimes[runtimes.size() / 2];
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace mlf
