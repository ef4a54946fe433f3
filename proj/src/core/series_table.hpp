#pragma once

#include <complex>
#include <vector>

#include "mlf/oracle.hpp"
#include "mp_float.hpp"

namespace mlf::detail {

// Truncation point of the Taylor series at one argument modulus.
struct Truncation {
  int last_index = 0;        // sum k = 0..last_index
  double tail_bound = 0.0;   // bound on sum_{k > last_index} |term_k|
  double log_max_term = 0.0; // log of the largest |term_k|, k <= last_index + 1
  double sum_abs = 0.0;      // sum_{k <= last_index} |term_k|
};

// Coefficients 1/Gamma(alpha (k + shift) + beta) in working precision, sized so that the
// series truncated per argument meets `accuracy` for every |z| <= radius.
//
// Tail bound: the term ratio |z| Gamma(alpha k + beta) / Gamma(alpha k + alpha + beta)
// is decreasing in k (log-convexity of Gamma), so once it drops below one the
// remainder is dominated by a geometric series.
class SeriesTable {
 public:
  SeriesTable(const MLParams& params, double radius, double accuracy, const OracleConfig& config,
              int min_bits = 0, int shift = 0);

  double radius() const { return radius_; }
  int bits() const { return bits_; }
  const MLParams& params() const { return params_; }

  Truncation truncation(double modulus, double target) const;

  // E(x) for real x with |x| <= radius
  OracleResult eval_real(double x) const;
  ComplexOracleResult eval_complex(std::complex<double> z) const;
  // sum in working precision, left in `out` (precision bits()); returns the truncation used
  Truncation sum_real(double x, MpFloat& out) const;

 private:
  double log_coeff(int k) const;
  double coeff_argument(int k) const;

  MLParams params_;
  double radius_;
  double accuracy_;
  int bits_ = 64;
  int shift_ = 0;  // E_{alpha, beta + alpha shift} without rounding the shifted beta
  std::vector<MpFloat> coeffs_;
  std::vector<double> log_coeffs_;  // log(1/Gamma(alpha k + beta)) up to the radius truncation
};

}  // namespace mlf::detail
