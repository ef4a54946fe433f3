#pragma once

#include <complex>

#include "mlf/params.hpp"

namespace mlf::detail {

struct AsymptoticResult {
  std::complex<double> value;
  double est_abs_error = 0.0;
  int terms_used = 0;
  bool converged = false;  // est_abs_error <= requested accuracy
};

// Large-|z| expansion for 0 < alpha < 2:
//
//   E(z) ~ (1/alpha) sum_m Z_m^{1-beta} exp(Z_m) - sum_{k>=1} z^{-k} / Gamma(beta - alpha k),
//   Z_m = z^{1/alpha} e^{2 pi i m / alpha},  |arg z + 2 pi m| <= alpha pi.
//
// The algebraic series is divergent; it is cut where its envelope first drops
// below the accuracy, and the first omitted envelope term is reported as the
// truncation error.
AsymptoticResult mlf_asymptotic(const MLParams& params, std::complex<double> z, double accuracy);

}  // namespace mlf::detail
