#include "asymptotic.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>

namespace mlf::detail {

namespace {

using cld = std::complex<long double>;

constexpr int kMaxTerms = 4000;
constexpr long double kPi = std::numbers::pi_v<long double>;

// log|1/Gamma(x)| and sign of 1/Gamma(x), with x possibly far negative.
struct RecipGamma {
  long double log_abs;
  int sign;  // 0 at poles
};

RecipGamma recip_gamma(long double x) {
  if (x > 0) return {-std::lgamma(x), 1};
  if (x == std::floor(x)) return {-INFINITY, 0};
  // 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi
  const long double reduced = x - 2 * std::floor(x / 2);
  const long double s = std::sin(kPi * reduced);
  return {std::lgamma(1 - x) + std::log(std::abs(s)) - std::log(kPi), s > 0 ? 1 : -1};
}

// log of the envelope Gamma(1 - x)/pi that bounds |1/Gamma(x)| for x < 0
long double log_envelope(long double x) {
  if (x > 0) return -std::lgamma(x);
  return std::lgamma(1 - x) - std::log(kPi);
}

}  // namespace

AsymptoticResult mlf_asymptotic(const MLParams& params, std::complex<double> zd, double accuracy) {
  const long double alpha = params.alpha;
  const long double beta = params.beta;
  const cld z(zd.real(), zd.imag());
  const long double modulus = std::abs(z);
  const long double log_mod = std::log(modulus);
  const long double theta = std::arg(z);

  AsymptoticResult out;

  // exponential (oscillatory) part
  cld expo(0, 0);
  long double expo_scale = 0;
  const int m_lo = static_cast<int>(std::ceil((-alpha * kPi - theta) / (2 * kPi)));
  const int m_hi = static_cast<int>(std::floor((alpha * kPi - theta) / (2 * kPi)));
  for (int m = m_lo; m <= m_hi; ++m) {
    const long double phase = (theta + 2 * kPi * m) / alpha;
    const cld log_zm(log_mod / alpha, phase);
    const cld zm = std::exp(log_zm);
    const cld term = std::exp((1 - beta) * log_zm + zm) / alpha;
    expo += term;
    expo_scale += std::abs(term) * (1 + std::abs(zm));
  }

  // algebraic part: - sum_{k>=1} z^{-k} / Gamma(beta - alpha k)
  cld algebraic(0, 0);
  long double sum_abs = 0;
  const long double log_target = std::log(static_cast<long double>(accuracy) / 4);
  long double best_envelope = INFINITY;
  int k = 1;
  for (; k <= kMaxTerms; ++k) {
    const long double x = beta - alpha * k;
    const long double envelope = -k * log_mod + log_envelope(x);
    if (envelope < log_target) break;
    // past the smallest term in the divergent regime: give up
    if (x < 0 && envelope > best_envelope) break;
    best_envelope = std::min(best_envelope, envelope);
    const RecipGamma rg = recip_gamma(x);
    if (rg.sign != 0) {
      const long double mag = std::exp(-k * log_mod + rg.log_abs);
      const cld term = std::polar(mag, -k * theta) * static_cast<long double>(rg.sign);
      algebraic -= term;
      sum_abs += mag;
    }
  }
  const long double x_next = beta - alpha * k;
  const long double truncation = std::exp(-k * log_mod + log_envelope(x_next));
  const long double rounding = 8 * LDBL_EPSILON * (sum_abs + expo_scale);

  const cld total = expo + algebraic;
  out.value = {static_cast<double>(total.real()), static_cast<double>(total.imag())};
  out.est_abs_error = static_cast<double>(truncation + rounding);
  out.terms_used = k - 1;
  out.converged = std::isfinite(out.est_abs_error) && out.est_abs_error <= accuracy;
  return out;
}

}  // namespace mlf::detail
