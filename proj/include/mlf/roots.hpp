#pragma once

#include <functional>
#include <vector>

#include "mlf/oracle.hpp"
#include "mlf/params.hpp"

namespace mlf {

/// Sampling and refinement settings for sign-change root detection.
struct ScanOptions {
  double dense_until = 10.0;  ///< dense sampling on [0, dense_until]
  int dense_per_unit = 64;
  int sparse_per_unit = 16;   ///< sampling density past dense_until
  double root_tolerance = 1e-10;
  /// local |f| minima below this level without a sign change are reported
  /// as suspected tangencies
  double tangency_level = 1e-9;
  /// refine grid-level local extrema of f to catch close root pairs that fall
  /// between two samples
  bool probe_extrema = true;
};

struct RootScan {
  std::vector<double> roots;                 ///< ascending, on (0, t_max]
  std::vector<double> suspected_tangencies;  ///< even-order root candidates
};

/// Scan grid: 0, then dense_per_unit points per unit up to dense_until, then
/// sparse_per_unit points per unit up to t_max (t_max itself included).
std::vector<double> scan_grid(double t_max, const ScanOptions& options = {});

/// Sign-change roots of an arbitrary function on (0, t_max].
RootScan scan_roots(const std::function<double(double)>& f, double t_max,
                    const ScanOptions& options = {});

/// true as soon as f is found to change sign on (0, t_max].
bool has_sign_change(const std::function<double(double)>& f, double t_max,
                     const ScanOptions& options = {});

/// Number of sign changes of f over the scan grid, with extremum probing.
int count_sign_changes(const std::function<double(double)>& f, double t_max,
                       const ScanOptions& options = {});

/// Real roots of E_{alpha,beta}(-t) (or of its t-derivative) on (0, t_max],
/// located on the oracle.
RootScan count_real_roots(const MLParams& params, double t_max, bool of_derivative,
                          double accuracy = 1e-12, const ScanOptions& options = {});

/// Early-exit form of count_real_roots(...).roots.empty() == false.
bool has_real_root(const MLParams& params, double t_max, bool of_derivative,
                   double accuracy = 1e-12, const ScanOptions& options = {});

}  // namespace mlf
