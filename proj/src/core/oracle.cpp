#include "mlf/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "asymptotic.hpp"
#include "mlf/errors.hpp"
#include "series_table.hpp"

namespace mlf {

namespace detail {

inline namespace internal {

constexpr int kMaxSeriesTerms = 200000;

double log_recip_gamma(double x) { return -std::lgamma(x); }  // x > 0 here

int bits_for(double log_max_term, double accuracy, int last_index) {
  const double magnitude_bits = std::max(0.0, log_max_term / std::log(2.0));
  const double accuracy_bits = std::max(0.0, -std::log2(accuracy));
  const double count_bits = std::log2(last_index + 2.0);
  return static_cast<int>(std::ceil(magnitude_bits + accuracy_bits + count_bits)) + 32;
}

}  // namespace

double SeriesTable::coeff_argument(int k) const {
  return params_.alpha * (k + shift_) + params_.beta;
}

double SeriesTable::log_coeff(int k) const {
  if (k < static_cast<int>(log_coeffs_.size())) return log_coeffs_[k];
  return log_recip_gamma(coeff_argument(k));
}

Truncation SeriesTable::truncation(double modulus, double target) const {
  Truncation tr;
  if (modulus == 0.0) {
    tr.last_index = 0;
    tr.log_max_term = log_coeff(0);
    tr.sum_abs = std::exp(tr.log_max_term);
    return tr;
  }
  const double lz = std::log(modulus);
  const double log_target = std::log(target);
  tr.log_max_term = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    const double log_term = k * lz + log_coeff(k);
    tr.log_max_term = std::max(tr.log_max_term, log_term);
    tr.sum_abs += std::exp(log_term);
    const double log_next = (k + 1) * lz + log_coeff(k + 1);
    const double log_ratio = lz + log_coeff(k + 2) - log_coeff(k + 1);
    if (log_ratio < 0.0) {
      const double log_tail = log_next - std::log1p(-std::exp(log_ratio));
      if (log_tail < log_target) {
        tr.last_index = k;
        tr.tail_bound = std::exp(log_tail);
        tr.log_max_term = std::max(tr.log_max_term, log_next);
        return tr;
      }
    }
  }
  throw PrecisionExhausted("series truncation did not converge for |z| = " + std::to_string(modulus));
}

SeriesTable::SeriesTable(const MLParams& params, double radius, double accuracy,
                         const OracleConfig& config, int min_bits, int shift)
    : params_(params), radius_(radius), accuracy_(accuracy), shift_(shift) {
  require_oracle_domain(params);
  if (!(accuracy > 0.0) || !std::isfinite(accuracy)) {
    throw DomainError("oracle accuracy must be positive and finite");
  }
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    throw DomainError("oracle argument must be finite");
  }

  const Truncation tr = truncation(radius, accuracy / 2);
  const int needed = std::max({64, min_bits, bits_for(tr.log_max_term, accuracy, tr.last_index)});
  if (needed > config.max_bits) {
    throw PrecisionExhausted("series at |z| = " + std::to_string(radius) + " needs " +
                             std::to_string(needed) + " bits (ceiling " +
                             std::to_string(config.max_bits) + ")");
  }
  bits_ = needed;

  const int n = tr.last_index + 3;
  log_coeffs_.reserve(n);
  for (int k = 0; k < n; ++k) log_coeffs_.push_back(log_recip_gamma(coeff_argument(k)));

  coeffs_.reserve(tr.last_index + 1);
  MpFloat arg(bits_);
  for (int k = 0; k <= tr.last_index; ++k) {
    mpfr_set_d(arg.get(), params.alpha, MPFR_RNDN);
    mpfr_mul_ui(arg.get(), arg.get(), static_cast<unsigned long>(k + shift_), MPFR_RNDN);
    mpfr_add_d(arg.get(), arg.get(), params.beta, MPFR_RNDN);
    MpFloat c(bits_);
    mpfr_gamma(c.get(), arg.get(), MPFR_RNDN);
    mpfr_ui_div(c.get(), 1, c.get(), MPFR_RNDN);
    coeffs_.push_back(std::move(c));
  }
}

Truncation SeriesTable::sum_real(double x, MpFloat& out) const {
  const Truncation tr = truncation(std::abs(x), accuracy_ / 2);
  if (tr.last_index >= static_cast<int>(coeffs_.size())) {
    throw DomainError("argument outside the range this oracle table was built for");
  }
  MpFloat xm(bits_, x);
  mpfr_set_prec(out.get(), bits_);
  mpfr_set(out.get(), coeffs_[tr.last_index].get(), MPFR_RNDN);
  for (int k = tr.last_index - 1; k >= 0; --k) {
    mpfr_mul(out.get(), out.get(), xm.get(), MPFR_RNDN);
    mpfr_add(out.get(), out.get(), coeffs_[k].get(), MPFR_RNDN);
  }
  return tr;
}

OracleResult SeriesTable::eval_real(double x) const {
  MpFloat sum(bits_);
  const Truncation tr = sum_real(x, sum);
  OracleResult res;
  res.value = sum.to_double();
  res.est_abs_error = tr.tail_bound + 4.0 * (tr.last_index + 2) * std::ldexp(tr.sum_abs, -bits_);
  res.terms_used = tr.last_index + 1;
  res.working_precision_bits = bits_;
  return res;
}

ComplexOracleResult SeriesTable::eval_complex(std::complex<double> z) const {
  const Truncation tr = truncation(std::abs(z), accuracy_ / 2);
  if (tr.last_index >= static_cast<int>(coeffs_.size())) {
    throw DomainError("argument outside the range this oracle table was built for");
  }
  MpFloat re(bits_), im(bits_, 0.0), zr(bits_, z.real()), zi(bits_, z.imag());
  MpFloat t1(bits_), t2(bits_);
  mpfr_set(re.get(), coeffs_[tr.last_index].get(), MPFR_RNDN);
  for (int k = tr.last_index - 1; k >= 0; --k) {
    // (re + i im)(zr + i zi)
    mpfr_mul(t1.get(), re.get(), zr.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), im.get(), zi.get(), MPFR_RNDN);
    mpfr_sub(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), re.get(), zi.get(), MPFR_RNDN);
    mpfr_mul(im.get(), im.get(), zr.get(), MPFR_RNDN);
    mpfr_add(im.get(), im.get(), t2.get(), MPFR_RNDN);
    mpfr_add(re.get(), t1.get(), coeffs_[k].get(), MPFR_RNDN);
  }
  ComplexOracleResult res;
  res.value = {re.to_double(), im.to_double()};
  res.est_abs_error = tr.tail_bound + 8.0 * (tr.last_index + 2) * std::ldexp(tr.sum_abs, -bits_);
  res.terms_used = tr.last_index + 1;
  res.working_precision_bits = bits_;
  return res;
}

}  // namespace detail

OracleConfig OracleConfig::from_environment() {
  OracleConfig cfg;
  if (const char* env = std::getenv("MLF_ORACLE_MAX_BITS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 64) cfg.max_bits = static_cast<int>(v);
  }
  return cfg;
}

const OracleConfig& default_oracle_config() {
  static const OracleConfig cfg = OracleConfig::from_environment();
  return cfg;
}

MlfOracle::MlfOracle(const MLParams& params, double radius, double accuracy,
                     const OracleConfig& config)
    : params_(params), radius_(radius), accuracy_(accuracy), config_(config) {
  series_ = std::make_shared<const detail::SeriesTable>(
      params, std::min(radius, config.series_range), accuracy, config);
}

std::shared_ptr<const detail::SeriesTable> MlfOracle::table_for(double modulus) const {
  if (modulus <= series_->radius()) return series_;
  return std::make_shared<const detail::SeriesTable>(params_, modulus, accuracy_, config_);
}

OracleResult MlfOracle::negative(double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("oracle argument t must be finite and >= 0");
  if (t <= config_.series_range) return table_for(t)->eval_real(-t);

  const auto asym = detail::mlf_asymptotic(params_, {-t, 0.0}, accuracy_);
  if (asym.converged) {
    return {asym.value.real(), asym.est_abs_error, asym.terms_used, 64};
  }
  return table_for(t)->eval_real(-t);
}

ComplexOracleResult MlfOracle::at(std::complex<double> z) const {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("oracle argument must be finite");
  const double modulus = std::abs(z);
  if (modulus <= config_.series_range) return table_for(modulus)->eval_complex(z);

  const auto asym = detail::mlf_asymptotic(params_, z, accuracy_);
  if (asym.converged) return {asym.value, asym.est_abs_error, asym.terms_used, 64};
  return table_for(modulus)->eval_complex(z);
}

MlfDerivativeOracle::MlfDerivativeOracle(const MLParams& params, double radius, double accuracy,
                                         const OracleConfig& config)
    : params_(params),
      first_({params.alpha, params.beta + params.alpha - 1.0}, radius,
             accuracy * params.alpha / 2.0, config) {
  const double weight = std::abs(params.beta - 1.0) / params.alpha;
  if (weight > 0.0) {
    second_ = std::make_unique<MlfOracle>(MLParams{params.alpha, params.beta + params.alpha}, radius,
                                          accuracy / (2.0 * weight), config);
  }
}

OracleResult MlfDerivativeOracle::negative(double t) const {
  const OracleResult a = first_.negative(t);
  OracleResult out;
  out.value = a.value;
  out.est_abs_error = a.est_abs_error / params_.alpha;
  out.terms_used = a.terms_used;
  out.working_precision_bits = a.working_precision_bits;
  if (second_) {
    const OracleResult b = second_->negative(t);
    out.value -= (params_.beta - 1.0) * b.value;
    out.est_abs_error += std::abs(params_.beta - 1.0) / params_.alpha * b.est_abs_error;
    out.terms_used += b.terms_used;
    out.working_precision_bits = std::max(out.working_precision_bits, b.working_precision_bits);
  }
  out.value = -out.value / params_.alpha;
  return out;
}

OracleResult mlf_oracle(const MLParams& params, double t, double accuracy, const OracleConfig& config) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("oracle argument t must be finite and >= 0");
  return MlfOracle(params, t, accuracy, config).negative(t);
}

ComplexOracleResult mlf_oracle_at(const MLParams& params, std::complex<double> z, double accuracy,
                                  const OracleConfig& config) {
  return MlfOracle(params, std::abs(z), accuracy, config).at(z);
}

OracleResult mlf_derivative_oracle(const MLParams& params, double t, double accuracy,
                                   const OracleConfig& config) {
  if (!(params.beta + params.alpha - 1.0 > 0.0)) {
    throw DomainError("derivative oracle needs beta + alpha - 1 > 0");
  }
  return MlfDerivativeOracle(params, t, accuracy, config).negative(t);
}

OracleResult mlf_oracle_recursive(const MLParams& params, int r, double t, double accuracy,
                                  const OracleConfig& config) {
  require_oracle_domain(params);
  if (r < 0) throw DomainError("derooting order r must be >= 0");
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("oracle argument t must be finite and >= 0");
  if (t > config.series_range) throw PrecisionExhausted("recursive oracle is series-only");

  // polynomial part sizes the precision together with the shifted series
  double log_max_poly = -std::numeric_limits<double>::infinity();
  const double lt = t > 0.0 ? std::log(t) : -std::numeric_limits<double>::infinity();
  for (int k = 0; k < r; ++k) {
    const double lk = (k == 0 ? 0.0 : k * lt) - std::lgamma(params.alpha * k + params.beta);
    log_max_poly = std::max(log_max_poly, lk);
  }
  const int poly_bits = r > 0 ? detail::bits_for(log_max_poly, accuracy, r) : 0;

  const double scale = r > 0 && t > 0.0 ? std::pow(t, r) : 1.0;
  const detail::SeriesTable table(params, t, accuracy / (2.0 * std::max(1.0, scale)), config,
                                  poly_bits, r);
  const int bits = table.bits();

  detail::MpFloat acc(bits);
  const detail::Truncation tr = table.sum_real(-t, acc);
  detail::MpFloat x(bits, -t);
  detail::MpFloat tmp(bits);
  // (-t)^r times the shifted series
  mpfr_pow_ui(tmp.get(), x.get(), static_cast<unsigned long>(r), MPFR_RNDN);
  mpfr_mul(acc.get(), acc.get(), tmp.get(), MPFR_RNDN);

  // + sum_{k<r} (-t)^k / Gamma(alpha k + beta), Horner in working precision
  detail::MpFloat poly(bits, 0.0), arg(bits);
  for (int k = r - 1; k >= 0; --k) {
    mpfr_mul(poly.get(), poly.get(), x.get(), MPFR_RNDN);
    mpfr_set_d(arg.get(), params.alpha, MPFR_RNDN);
    mpfr_mul_ui(arg.get(), arg.get(), static_cast<unsigned long>(k), MPFR_RNDN);
    mpfr_add_d(arg.get(), arg.get(), params.beta, MPFR_RNDN);
    mpfr_gamma(tmp.get(), arg.get(), MPFR_RNDN);
    mpfr_ui_div(tmp.get(), 1, tmp.get(), MPFR_RNDN);
    mpfr_add(poly.get(), poly.get(), tmp.get(), MPFR_RNDN);
  }
  mpfr_add(acc.get(), acc.get(), poly.get(), MPFR_RNDN);

  const double poly_abs = r > 0 ? r * std::exp(log_max_poly) : 0.0;
  OracleResult res;
  res.value = acc.to_double();
  res.est_abs_error = scale * tr.tail_bound +
                      4.0 * (tr.last_index + r + 2) * std::ldexp(scale * tr.sum_abs + poly_abs, -bits);
  res.terms_used = tr.last_index + 1 + r;
  res.working_precision_bits = bits;
  return res;
}

}  // namespace mlf
