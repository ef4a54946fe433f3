#pragma once

#include "mlf/params.hpp"

namespace mlf {

/// Reciprocal gamma function 1/Gamma(x) in double precision.
///
/// Total on the finite reals: the poles x = 0, -1, -2, ... map to exactly 0,
/// and arguments past the overflow threshold of Gamma underflow gracefully.
double rgamma(double x);

/// Gamma(x) / Gamma(y) without intermediate overflow. Returns 0 when y is a
/// pole of Gamma; the caller must keep x away from the poles.
double gamma_ratio(double x, double y);

/// true when x is a non-positive integer.
bool is_gamma_pole(double x);

/// Polynomial part of the recursive identity
///
///   P^{r-1}_{alpha,beta}(x) = sum_{k=0}^{r-1} x^k / Gamma(alpha k + beta),
///
/// exactly 0 for r = 0. Note the argument is x itself; the derooted
/// approximant evaluates it at x = -t.
double poly_tail(const MLParams& p, int r, double x);

}  // namespace mlf
