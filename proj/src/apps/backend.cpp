#include "mlf/apps.hpp"

#include <algorithm>

namespace mlf {

std::string describe(const Backend& backend) {
  if (std::holds_alternative<OracleBackend>(backend)) return "oracle";
  const auto& d = std::get<DerootedBackend>(backend);
  std::string name = to_string(d.order);
  std::replace(name.begin(), name.end(), ',', '/');
  return "R" + name + " r=" + std::to_string(d.r);
}

namespace {

std::variant<MlfOracle, DerootedApproximant> make_impl(const MLParams& params, const Backend& backend,
                                                       double x_max) {
  if (const auto* o = std::get_if<OracleBackend>(&backend)) {
    return std::variant<MlfOracle, DerootedApproximant>(std::in_place_type<MlfOracle>, params,
                                                        std::max(x_max, 1.0), o->accuracy);
  }
  const auto& d = std::get<DerootedBackend>(backend);
  return build_derooted(params, d.order, d.r);
}

}  // namespace

MlfEvaluator::MlfEvaluator(const MLParams& params, const Backend& backend, double x_max)
    : impl_(make_impl(params, backend, x_max)) {}

double MlfEvaluator::operator()(double x) const {
  if (const auto* o = std::get_if<MlfOracle>(&impl_)) return o->negative(x).value;
  return eval_derooted(std::get<DerootedApproximant>(impl_), x);
}

std::complex<double> MlfEvaluator::operator()(std::complex<double> x) const {
  if (const auto* o = std::get_if<MlfOracle>(&impl_)) return o->at(-x).value;
  return eval_derooted(std::get<DerootedApproximant>(impl_), x);
}

}  // namespace mlf
