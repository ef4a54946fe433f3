#include <cmath>

#include "mlf/apps.hpp"
#include "mlf/errors.hpp"

namespace mlf {

std::string to_string(Problem problem) {
  switch (problem) {
    case Problem::PlasmaStatic: return "plasma-static";
    case Problem::PlasmaNoField: return "plasma-free";
    case Problem::Wave: return "wave";
  }
  return "?";
}

Problem parse_problem(std::string_view text) {
  for (Problem p : {Problem::PlasmaStatic, Problem::PlasmaNoField, Problem::Wave}) {
    if (text == to_string(p)) return p;
  }
  throw DomainError("unknown problem '" + std::string(text) + "' (expected plasma-static, plasma-free or wave)");
}

namespace {

double require_alpha(double alpha) {
  if (!(alpha > 1.0 && alpha <= 2.0)) throw DomainError("alpha must lie in (1, 2]");
  return alpha;
}

double require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("time must be finite and >= 0");
  return t;
}

}  // namespace

PlasmaSolution::PlasmaSolution(Problem problem, double alpha, const Backend& backend, double t_max)
    : problem_(problem),
      alpha_(require_alpha(alpha)),
      e1_({alpha, 1.0}, backend, std::pow(require_time(t_max), alpha)),
      e2_({alpha, 2.0}, backend, std::pow(t_max, alpha)) {
  if (problem == Problem::Wave) throw DomainError("the wave problem is not a plasma problem");
  if (problem == Problem::PlasmaStatic) e3_.emplace(MLParams{alpha, alpha + 1.0}, backend, std::pow(t_max, alpha));
}

double PlasmaSolution::operator()(double t) const {
  require_time(t);
  const double ta = std::pow(t, alpha_);
  if (problem_ == Problem::PlasmaStatic) return e1_(ta) - t * e2_(ta) + ta * (*e3_)(ta);
  return 0.2 * e1_(ta) + 0.1 * t * e2_(ta);
}

double plasma_static_solution(double alpha, double t, const Backend& backend) {
  return PlasmaSolution(Problem::PlasmaStatic, alpha, backend, t)(t);
}

double plasma_nofield_solution(double alpha, double t, const Backend& backend) {
  return PlasmaSolution(Problem::PlasmaNoField, alpha, backend, t)(t);
}

}  // namespace mlf
