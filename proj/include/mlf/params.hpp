#pragma once

#include <string>

namespace mlf {

/// Parameter pair (alpha, beta) of E_{alpha,beta}.
///
/// Approximants are defined on 1 < alpha <= 2, beta >= 1. The series oracle
/// accepts the wider range 0 < alpha <= 2, beta > 0 so it can be used for
/// cross-checks (alpha = 1 gives the exponential) and for the shifted second
/// parameters that appear in the derivative formula.
struct MLParams {
  double alpha = 1.5;
  double beta = 1.0;

  bool operator==(const MLParams&) const = default;
};

/// Throws DomainError unless 1 < alpha <= 2 and beta >= 1.
void require_approximant_domain(const MLParams& p);

/// Throws DomainError unless 0 < alpha <= 2 and beta > 0 (both finite).
void require_oracle_domain(const MLParams& p);

std::string to_string(const MLParams& p);

}  // namespace mlf
