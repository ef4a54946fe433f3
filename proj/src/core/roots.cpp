#include "mlf/roots.hpp"

#include <algorithm>
#include <cmath>

#include "mlf/errors.hpp"

namespace mlf {

namespace {

constexpr int kMaxGoldenIterations = 80;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

double bisect(const std::function<double(double)>& f, double a, double b, double fa, double tol) {
  const int sa = sign_of(fa);
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (sign_of(fm) == sa) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

struct Probe {
  double location;
  double value;  // of s * f at location
};

// Golden-section search for the minimum of s*f on [a, b]; returns early once
// s*f becomes non-positive.
Probe probe_minimum(const std::function<double(double)>& f, int s, double a, double b, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double g1 = s * f(x1);
  double g2 = s * f(x2);
  for (int it = 0; it < kMaxGoldenIterations && b - a > tol; ++it) {
    if (g1 <= 0.0) return {x1, g1};
    if (g2 <= 0.0) return {x2, g2};
    if (g1 < g2) {
      b = x2;
      x2 = x1;
      g2 = g1;
      x1 = b - kInvPhi * (b - a);
      g1 = s * f(x1);
    } else {
      a = x1;
      x1 = x2;
      g1 = g2;
      x2 = a + kInvPhi * (b - a);
      g2 = s * f(x2);
    }
  }
  return g1 < g2 ? Probe{x1, g1} : Probe{x2, g2};
}

// Walks the grid; returns true as soon as a root is found when stop_at_first.
bool scan_impl(const std::function<double(double)>& f, double t_max, const ScanOptions& opt,
               bool stop_at_first, RootScan& out) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("scan range t_max must be positive");
  const std::vector<double> grid = scan_grid(t_max, opt);
  std::vector<double> v;
  v.reserve(grid.size());
  v.push_back(f(grid[0]));

  for (std::size_t i = 1; i < grid.size(); ++i) {
    v.push_back(f(grid[i]));
    const double a = grid[i - 1], b = grid[i];
    const double fa = v[i - 1], fb = v[i];

    if (fb == 0.0) {
      out.roots.push_back(b);
      if (stop_at_first) return true;
    } else if (fa != 0.0 && sign_of(fa) != sign_of(fb)) {
      out.roots.push_back(bisect(f, a, b, fa, opt.root_tolerance));
      if (stop_at_first) return true;
    }

    // local minimum of |f| at grid[i-1] with no sign change on either side
    if (opt.probe_extrema && i >= 2) {
      const double f0 = v[i - 2], f1 = v[i - 1], f2 = v[i];
      const int s = sign_of(f1);
      if (s != 0 && sign_of(f0) == s && sign_of(f2) == s && std::abs(f1) <= std::abs(f0) &&
          std::abs(f1) <= std::abs(f2)) {
        const double lo = grid[i - 2], hi = grid[i];
        const Probe p = probe_minimum(f, s, lo, hi, opt.root_tolerance);
        if (p.value < 0.0) {
          out.roots.push_back(bisect(f, lo, p.location, f0, opt.root_tolerance));
          out.roots.push_back(bisect(f, p.location, hi, -f2, opt.root_tolerance));
          if (stop_at_first) return true;
        } else if (p.value == 0.0) {
          out.roots.push_back(p.location);
          if (stop_at_first) return true;
        } else if (p.value < opt.tangency_level) {
          out.suspected_tangencies.push_back(p.location);
        }
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  std::sort(out.suspected_tangencies.begin(), out.suspected_tangencies.end());
  return !out.roots.empty();
}

}  // namespace

std::vector<double> scan_grid(double t_max, const ScanOptions& opt) {
  std::vector<double> grid{0.0};
  const double dense_end = std::min(t_max, opt.dense_until);
  const int n_dense = static_cast<int>(std::floor(dense_end * opt.dense_per_unit + 1e-9));
  for (int i = 1; i <= n_dense; ++i) grid.push_back(static_cast<double>(i) / opt.dense_per_unit);
  if (t_max > opt.dense_until) {
    const int n_sparse =
        static_cast<int>(std::floor((t_max - opt.dense_until) * opt.sparse_per_unit + 1e-9));
    for (int j = 1; j <= n_sparse; ++j) {
      grid.push_back(opt.dense_until + static_cast<double>(j) / opt.sparse_per_unit);
    }
  }
  if (grid.back() < t_max) grid.push_back(t_max);
  return grid;
}

RootScan scan_roots(const std::function<double(double)>& f, double t_max, const ScanOptions& options) {
  RootScan out;
  scan_impl(f, t_max, options, false, out);
  return out;
}

bool has_sign_change(const std::function<double(double)>& f, double t_max, const ScanOptions& options) {
  RootScan out;
  return scan_impl(f, t_max, options, true, out);
}

int count_sign_changes(const std::function<double(double)>& f, double t_max, const ScanOptions& options) {
  return static_cast<int>(scan_roots(f, t_max, options).roots.size());
}

namespace {

std::function<double(double)> oracle_function(const MLParams& params, double t_max, bool of_derivative,
                                              double accuracy) {
  if (of_derivative) {
    auto d = std::make_shared<MlfDerivativeOracle>(params, t_max, accuracy);
    return [d](double t) { return d->negative(t).value; };
  }
  auto o = std::make_shared<MlfOracle>(params, t_max, accuracy);
  return [o](double t) { return o->negative(t).value; };
}

}  // namespace

RootScan count_real_roots(const MLParams& params, double t_max, bool of_derivative, double accuracy,
                          const ScanOptions& options) {
  return scan_roots(oracle_function(params, t_max, of_derivative, accuracy), t_max, options);
}

bool has_real_root(const MLParams& params, double t_max, bool of_derivative, double accuracy,
                   const ScanOptions& options) {
  return has_sign_change(oracle_function(params, t_max, of_derivative, accuracy), t_max, options);
}

}  // namespace mlf
