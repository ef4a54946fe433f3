#include "mlf/gamma.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "mlf/errors.hpp"

namespace mlf {

namespace {

// Gamma(x) overflows a double a little past 171.6.
constexpr double kGammaOverflow = 171.0;

// sign of Gamma(x) for x not a pole
double gamma_sign(double x) {
  if (x > 0.0) return 1.0;
  return (static_cast<long long>(std::floor(x)) % 2 == 0) ? 1.0 : -1.0;
}

// log|Gamma(x)|; the sign is tracked by gamma_sign
double log_abs_gamma(double x) { return std::lgamma(x); }

}  // namespace

void require_approximant_domain(const MLParams& p) {
  if (!(p.alpha > 1.0 && p.alpha <= 2.0) || !(p.beta >= 1.0) || !std::isfinite(p.beta)) {
    throw DomainError("parameters outside 1 < alpha <= 2, beta >= 1: " + to_string(p));
  }
}

void require_oracle_domain(const MLParams& p) {
  if (!(p.alpha > 0.0 && p.alpha <= 2.0) || !(p.beta > 0.0) || !std::isfinite(p.beta)) {
    throw DomainError("parameters outside 0 < alpha <= 2, beta > 0: " + to_string(p));
  }
}

std::string to_string(const MLParams& p) {
  std::ostringstream os;
  os.precision(17);
  os << "(alpha=" << p.alpha << ", beta=" << p.beta << ")";
  return os.str();
}

bool is_gamma_pole(double x) { return x <= 0.0 && x == std::floor(x); }

double rgamma(double x) {
  if (is_gamma_pole(x)) return 0.0;
  if (x > kGammaOverflow) return std::exp(-log_abs_gamma(x));
  if (x < -kGammaOverflow) {
    // reflection: 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
    const double s = std::sin(std::numbers::pi * (x - 2.0 * std::floor(x / 2.0)));
    return s * std::exp(log_abs_gamma(1.0 - x)) / std::numbers::pi;
  }
  return 1.0 / std::tgamma(x);
}

double gamma_ratio(double x, double y) {
  if (is_gamma_pole(y)) return 0.0;
  if (x == y) return 1.0;
  if (std::abs(x) < kGammaOverflow && std::abs(y) < kGammaOverflow) {
    return std::tgamma(x) * rgamma(y);
  }
  return gamma_sign(x) * gamma_sign(y) * std::exp(log_abs_gamma(x) - log_abs_gamma(y));
}

double poly_tail(const MLParams& p, int r, double x) {
  if (r <= 0) return 0.0;
  double acc = rgamma(p.alpha * (r - 1) + p.beta);
  for (int k = r - 2; k >= 0; --k) acc = acc * x + rgamma(p.alpha * k + p.beta);
  return acc;
}

}  // namespace mlf
