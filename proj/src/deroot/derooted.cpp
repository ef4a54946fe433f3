#include "mlf/derooted.hpp"

#include <algorithm>
#include <cmath>

#include "mlf/errors.hpp"
#include "mlf/gamma.hpp"
#include "mlf/oracle.hpp"

namespace mlf {

DerootedApproximant build_derooted(const MLParams& params, PadeOrder order, int r) {
  require_approximant_domain(params);
  if (r < 0) throw DomainError("derooting order r must be >= 0");
  DerootedApproximant d;
  d.params = params;
  d.order = order;
  d.r = r;
  d.base = build_pade({params.alpha, params.beta + params.alpha * r}, order);
  d.tail_coeffs.reserve(r);
  for (int k = 0; k < r; ++k) d.tail_coeffs.push_back(rgamma(params.alpha * k + params.beta));
  return d;
}

double eval_derooted(const DerootedApproximant& d, double t) {
  const double base = eval_rational(d.base, t);
  if (d.r == 0) return base;
  const double x = -t;
  double power = 1.0;
  for (int k = 0; k < d.r; ++k) power *= x;
  const double out = power * base + horner(d.tail_coeffs, x);
  if (!std::isfinite(out)) {
    throw Overflow("derooted evaluation overflows at t = " + std::to_string(t) + ", r = " + std::to_string(d.r));
  }
  return out;
}

std::complex<double> eval_derooted(const DerootedApproximant& d, std::complex<double> t) {
  const std::complex<double> base = eval_rational(d.base, t);
  if (d.r == 0) return base;
  const std::complex<double> x = -t;
  std::complex<double> power = 1.0;
  for (int k = 0; k < d.r; ++k) power *= x;
  const std::complex<double> out = power * base + horner(d.tail_coeffs, x);
  if (!std::isfinite(out.real()) || !std::isfinite(out.imag())) {
    throw Overflow("derooted evaluation overflows at a complex argument, r = " + std::to_string(d.r));
  }
  return out;
}

double pointwise_error(const DerootedApproximant& d, double t, double accuracy) {
  return std::abs(mlf_oracle(d.params, t, accuracy).value - eval_derooted(d, t));
}

double relative_error(double approx, double reference) {
  return std::abs(approx - reference) / std::max(std::abs(reference), 1e-12);
}

}  // namespace mlf
