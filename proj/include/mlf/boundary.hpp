#pragma once

#include <string>
#include <vector>

#include "mlf/params.hpp"
#include "mlf/roots.hpp"

namespace mlf {

/// phi: above it E_{alpha,beta}(-t) has no real roots; psi: the same for
/// its t-derivative.
enum class Boundary { phi, psi };

/// Phase-diagram cells of the strip 1 < alpha <= 2, beta >= 1.
enum class Region { A, B, C, D, F };

std::string to_string(Region region);
std::string to_string(Boundary which);
/// "phi" / "psi"; throws DomainError otherwise.
Boundary parse_boundary(const std::string& text);

/// Boundary values on the grid alpha = 1.00, 1.05, ..., 2.00.
struct BoundaryTable {
  std::vector<double> alphas;
  std::vector<double> phi;
  std::vector<double> psi;

  /// The shipped data (21 rows).
  static const BoundaryTable& embedded();
  /// "alpha,phi,psi" header then one row per grid point, values as tabulated.
  std::string to_csv() const;
};

/// Piecewise-linear interpolation; exact at the nodes. Throws OutOfRange
/// for alpha outside [1, 2].
double boundary_lookup(const BoundaryTable& table, double alpha, Boundary which);

/// beta < phi: A; else beta < psi: B (beta < alpha+1) or C; else D (beta <
/// alpha+1) or F. Values within 1e-12 of a threshold count as above it.
Region classify_region(const MLParams& params, const BoundaryTable& table = BoundaryTable::embedded());

struct BoundaryOptions {
  double t_scan = 100.0;       ///< roots are searched on (0, t_scan]
  double beta_lo = 1.0;
  double beta_hi = 4.0;
  double oracle_accuracy = 1e-12;
  ScanOptions scan;
};

/// Recomputes phi(alpha) or psi(alpha) by bisection in beta on the predicate
/// "E (or dE/dt) has a real root on (0, t_scan]". When the predicate already
/// fails at beta_lo the boundary is at or below the strip edge and beta_lo is
/// returned. Throws BracketFailure when roots persist at beta_hi.
double compute_boundary(double alpha, Boundary which, double tol, const BoundaryOptions& options = {});

}  // namespace mlf
