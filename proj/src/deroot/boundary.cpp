#include "mlf/boundary.hpp"

#include <charconv>
#include <cmath>

#include "mlf/errors.hpp"
#include "mlf/oracle.hpp"

namespace mlf {

namespace {

constexpr double kTie = 1e-12;

std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string to_string(Region region) {
  switch (region) {
    case Region::A: return "A";
    case Region::B: return "B";
    case Region::C: return "C";
    case Region::D: return "D";
    case Region::F: return "F";
  }
  return "?";
}

std::string to_string(Boundary which) { return which == Boundary::phi ? "phi" : "psi"; }

Boundary parse_boundary(const std::string& text) {
  if (text == "phi") return Boundary::phi;
  if (text == "psi") return Boundary::psi;
  throw DomainError("unknown boundary '" + text + "' (expected phi or psi)");
}

const BoundaryTable& BoundaryTable::embedded() {
  static const BoundaryTable table{
      {1.00, 1.05, 1.10, 1.15, 1.20, 1.25, 1.30, 1.35, 1.40, 1.45, 1.50,
       1.55, 1.60, 1.65, 1.70, 1.75, 1.80, 1.85, 1.90, 1.95, 2.00},
      {1.00000, 1.05924, 1.12400, 1.19325, 1.26674, 1.34437, 1.42608, 1.51187, 1.60173, 1.69565, 1.79365,
       1.89573, 2.00191, 2.11219, 2.22660, 2.34513, 2.46779, 2.59460, 2.72557, 2.86070, 3.00000},
      {1.00000, 1.06640, 1.14204, 1.22532, 1.31565, 1.41277, 1.51654, 1.62689, 1.74374, 1.86706, 1.99685,
       2.13306, 2.27568, 2.42471, 2.58014, 2.74196, 2.91017, 3.08477, 3.26575, 3.45311, 3.64686},
  };
  return table;
}

std::string BoundaryTable::to_csv() const {
  std::string out = "alpha,phi,psi\n";
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    out += shortest(alphas[i]) + ',' + shortest(phi[i]) + ',' + shortest(psi[i]) + '\n';
  }
  return out;
}

double boundary_lookup(const BoundaryTable& table, double alpha, Boundary which) {
  const auto& ys = which == Boundary::phi ? table.phi : table.psi;
  const auto& xs = table.alphas;
  if (!(alpha >= xs.front() && alpha <= xs.back())) {
    throw OutOfRange("alpha = " + std::to_string(alpha) + " outside the boundary table range [1, 2]");
  }
  std::size_t i = 1;
  while (i + 1 < xs.size() && xs[i] < alpha) ++i;
  if (alpha == xs[i]) return ys[i];
  if (alpha == xs[i - 1]) return ys[i - 1];
  const double w = (alpha - xs[i - 1]) / (xs[i] - xs[i - 1]);
  return ys[i - 1] + w * (ys[i] - ys[i - 1]);
}

Region classify_region(const MLParams& params, const BoundaryTable& table) {
  require_approximant_domain(params);
  const double phi = boundary_lookup(table, params.alpha, Boundary::phi);
  const double psi = boundary_lookup(table, params.alpha, Boundary::psi);
  const double b = params.beta;
  const bool below_line = b < params.alpha + 1.0 - kTie;
  if (b < phi - kTie) return Region::A;
  if (b < psi - kTie) return below_line ? Region::B : Region::C;
  return below_line ? Region::D : Region::F;
}

double compute_boundary(double alpha, Boundary which, double tol, const BoundaryOptions& options) {
  if (!(alpha > 1.0 && alpha <= 2.0)) throw DomainError("compute_boundary needs 1 < alpha <= 2");
  if (!(tol >= 1e-4)) throw DomainError("compute_boundary tolerance must be >= 1e-4");
  const bool derivative = which == Boundary::psi;
  auto has_roots = [&](double beta) {
    return has_real_root({alpha, beta}, options.t_scan, derivative, options.oracle_accuracy, options.scan);
  };
  double lo = options.beta_lo, hi = options.beta_hi;
  if (has_roots(hi)) {
    throw BracketFailure("roots persist at beta = " + std::to_string(hi) + " for alpha = " + std::to_string(alpha));
  }
  if (!has_roots(lo)) return lo;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (has_roots(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace mlf
