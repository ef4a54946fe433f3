#pragma once

#include <complex>
#include <memory>

#include "mlf/params.hpp"

namespace mlf {

/// Knobs of the high-precision reference evaluator.
struct OracleConfig {
  /// Ceiling on the working precision; exceeding it raises PrecisionExhausted.
  int max_bits = 4096;
  /// Arguments with |z| up to this modulus are summed from the Taylor series.
  /// Beyond it the large-argument expansion is used when its error estimate
  /// meets the requested accuracy, and the series otherwise.
  double series_range = 512.0;

  /// Defaults, with max_bits overridden by MLF_ORACLE_MAX_BITS when set.
  static OracleConfig from_environment();
};

/// Process-wide default, read once from the environment.
const OracleConfig& default_oracle_config();

struct OracleResult {
  double value = 0.0;
  /// Bound on truncation plus rounding error of the working-precision sum.
  /// The final rounding to double adds at most half an ulp of value.
  double est_abs_error = 0.0;
  int terms_used = 0;
  int working_precision_bits = 0;
};

struct ComplexOracleResult {
  std::complex<double> value;
  double est_abs_error = 0.0;
  int terms_used = 0;
  int working_precision_bits = 0;
};

namespace detail {
class SeriesTable;
}

/// Reusable reference evaluator of E_{alpha,beta} for a fixed parameter pair.
///
/// The reciprocal-gamma coefficients are computed once, in arbitrary precision,
/// for every argument of modulus up to `radius`; each evaluation then costs one
/// multiprecision Horner pass truncated for its own argument. Instances are
/// immutable and may be shared between threads.
class MlfOracle {
 public:
  MlfOracle(const MLParams& params, double radius, double accuracy,
            const OracleConfig& config = default_oracle_config());

  /// E_{alpha,beta}(-t) for t >= 0.
  OracleResult negative(double t) const;
  /// E_{alpha,beta}(z) for complex z.
  ComplexOracleResult at(std::complex<double> z) const;

  const MLParams& params() const { return params_; }
  double accuracy() const { return accuracy_; }
  double radius() const { return radius_; }

 private:
  std::shared_ptr<const detail::SeriesTable> table_for(double modulus) const;

  MLParams params_;
  double radius_;
  double accuracy_;
  OracleConfig config_;
  std::shared_ptr<const detail::SeriesTable> series_;
};

/// Derivative d/dt E_{alpha,beta}(-t) through
///   -(1/alpha) [E_{alpha,beta+alpha-1}(-t) - (beta-1) E_{alpha,beta+alpha}(-t)],
/// splitting the accuracy budget between the two terms by weight.
class MlfDerivativeOracle {
 public:
  MlfDerivativeOracle(const MLParams& params, double radius, double accuracy,
                      const OracleConfig& config = default_oracle_config());

  OracleResult negative(double t) const;

 private:
  MLParams params_;
  MlfOracle first_;
  std::unique_ptr<MlfOracle> second_;  // absent when beta == 1
};

/// E_{alpha,beta}(-t) to absolute accuracy `accuracy`.
OracleResult mlf_oracle(const MLParams& params, double t, double accuracy,
                        const OracleConfig& config = default_oracle_config());

/// E_{alpha,beta}(z) for complex z.
ComplexOracleResult mlf_oracle_at(const MLParams& params, std::complex<double> z, double accuracy,
                                  const OracleConfig& config = default_oracle_config());

/// d/dt E_{alpha,beta}(-t); requires beta + alpha - 1 > 0.
OracleResult mlf_derivative_oracle(const MLParams& params, double t, double accuracy,
                                   const OracleConfig& config = default_oracle_config());

/// Right-hand side of the recursive identity,
///   (-t)^r E_{alpha,beta+alpha r}(-t) + P^{r-1}_{alpha,beta}(-t),
/// accumulated entirely in working precision so the polynomial cancellation
/// does not leak into the result.
OracleResult mlf_oracle_recursive(const MLParams& params, int r, double t, double accuracy,
                                  const OracleConfig& config = default_oracle_config());

}  // namespace mlf
