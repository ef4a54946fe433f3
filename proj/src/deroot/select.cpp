#include <cmath>
#include <limits>

#include "mlf/derooted.hpp"
#include "mlf/errors.hpp"
#include "mlf/oracle.hpp"

namespace mlf {

namespace {

int select_boundary(const MLParams& params, const BoundaryTable& table, int max_r) {
  const double psi = boundary_lookup(table, params.alpha, Boundary::psi);
  for (int r = 0; r <= max_r; ++r) {
    if (params.beta + params.alpha * r >= psi) return r;
  }
  throw SelectionExhausted("no r <= " + std::to_string(max_r) + " lifts beta above psi");
}

}  // namespace

std::vector<HorizonCandidate> horizon_candidates(const MLParams& params, PadeOrder order, double t_max,
                                                 const SelectionOptions& options, int* oracle_roots,
                                                 bool stop_at_accept) {
  require_approximant_domain(params);
  if (!(t_max > 0.0)) throw DomainError("horizon t_max must be positive");
  const int target_roots =
      static_cast<int>(count_real_roots(params, t_max, false, options.oracle_accuracy).roots.size());
  if (oracle_roots) *oracle_roots = target_roots;

  const int n = std::max(2, options.grid_points);
  std::vector<double> ts(n), ref(n);
  const MlfOracle oracle(params, t_max, options.oracle_accuracy);
  for (int i = 0; i < n; ++i) {
    ts[i] = t_max * i / (n - 1);
    ref[i] = oracle.negative(ts[i]).value;
  }

  std::vector<HorizonCandidate> out;
  for (int r = 0; r <= options.max_r; ++r) {
    HorizonCandidate c;
    c.r = r;
    try {
      const DerootedApproximant d = build_derooted(params, order, r);
      c.sign_changes = count_sign_changes([&](double t) { return eval_derooted(d, t); }, t_max);
      for (int i = 0; i < n; ++i) {
        if (std::abs(ref[i]) <= options.significance) continue;
        c.max_relative_error = std::max(c.max_relative_error, relative_error(eval_derooted(d, ts[i]), ref[i]));
      }
      c.built = true;
    } catch (const DegenerateParameters&) {
    } catch (const IllConditionedSystem&) {
    } catch (const PoleEncountered&) {
    } catch (const Overflow&) {
    }
    out.push_back(c);
    const bool accepted = c.built && c.sign_changes == target_roots && c.max_relative_error <= options.target;
    if (accepted && stop_at_accept) break;
  }
  return out;
}

int select_r(const MLParams& params, PadeOrder order, const BoundaryTable& table, const SelectionMode& mode,
             const SelectionOptions& options) {
  require_approximant_domain(params);
  if (std::holds_alternative<BoundaryMode>(mode)) return select_boundary(params, table, options.max_r);

  const double t_max = std::get<HorizonMode>(mode).t_max;
  int target = 0;
  const auto candidates = horizon_candidates(params, order, t_max, options, &target, true);
  const auto& last = candidates.back();
  if (last.built && last.sign_changes == target && last.max_relative_error <= options.target) return last.r;
  throw SelectionExhausted("no r <= " + std::to_string(options.max_r) + " tracks the " + std::to_string(target) +
                           " roots on (0, " + std::to_string(t_max) + "] within the error target");
}

}  // namespace mlf
