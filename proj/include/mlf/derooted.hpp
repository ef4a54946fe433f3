#pragma once

#include <complex>
#include <variant>
#include <vector>

#include "mlf/boundary.hpp"
#include "mlf/pade.hpp"

namespace mlf {

/// R^{m,n,r}(t) = (-t)^r R^{m,n}_{alpha,beta+alpha r}(t) + P^{r-1}_{alpha,beta}(-t)
struct DerootedApproximant {
  MLParams params;
  PadeOrder order = PadeOrder::k13_4;
  int r = 0;
  RationalApproximant base;         ///< built for (alpha, beta + alpha r)
  std::vector<double> tail_coeffs;  ///< 1/Gamma(alpha k + beta), k < r
};

DerootedApproximant build_derooted(const MLParams& params, PadeOrder order, int r);

/// Throws Overflow when (-t)^r or the result is not finite.
double eval_derooted(const DerootedApproximant& d, double t);
std::complex<double> eval_derooted(const DerootedApproximant& d, std::complex<double> t);

/// |E_{alpha,beta}(-t) - R^{m,n,r}(t)| against the oracle at `accuracy`.
double pointwise_error(const DerootedApproximant& d, double t, double accuracy);

/// |approx - ref| / max(|ref|, 1e-12)
double relative_error(double approx, double reference);

struct BoundaryMode {};
struct HorizonMode {
  double t_max = 20.0;
};
using SelectionMode = std::variant<BoundaryMode, HorizonMode>;

struct SelectionOptions {
  double target = 5e-2;          ///< horizon mode: max relative error
  double significance = 1e-3;    ///< errors only counted where |E| > this
  int grid_points = 256;
  int max_r = 40;
  double oracle_accuracy = 1e-12;
};

/// Boundary mode: smallest r >= 0 with beta + alpha r >= psi(alpha).
/// Horizon mode: smallest r whose approximant has as many sign changes on
/// (0, t_max] as the function and meets the error target on a uniform grid.
/// Throws SelectionExhausted past max_r.
int select_r(const MLParams& params, PadeOrder order, const BoundaryTable& table, const SelectionMode& mode,
             const SelectionOptions& options = {});

/// Diagnostics of one horizon-mode candidate.
struct HorizonCandidate {
  int r = 0;
  bool built = false;
  int sign_changes = 0;
  double max_relative_error = 0.0;
};

/// Candidates r = 0..max_r evaluated the way horizon mode does, for
/// reporting; stops after the first accepted r when stop_at_accept is set.
std::vector<HorizonCandidate> horizon_candidates(const MLParams& params, PadeOrder order, double t_max,
                                                 const SelectionOptions& options, int* oracle_roots,
                                                 bool stop_at_accept = true);

}  // namespace mlf
