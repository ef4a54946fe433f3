#pragma once

#include <complex>
#include <vector>

#include "mlf/pade.hpp"

namespace mlf {

/// R(t) = 2 Re sum_i c_i / (t - s_i) + sum_k d_k / (t - r_k)
///
/// with one representative (Im s_i > 0) per conjugate pole pair; the real
/// poles r_k and residues d_k are used only under real_pole_fallback.
/// Residues include the prefactor.
struct PartialFractionForm {
  std::vector<std::complex<double>> residues;
  std::vector<std::complex<double>> poles;
  std::vector<double> real_residues;
  std::vector<double> real_poles;
  bool real_pole_fallback = false;
  double prefactor = 0.0;
};

/// Roots of a monic polynomial (ascending coefficients, last = 1) from the
/// eigenvalues of its scaled, balanced companion matrix, Newton-polished.
std::vector<std::complex<double>> monic_roots(const std::vector<double>& coeffs);

/// Throws RepeatedPoles when two denominator roots coincide within 1e-8.
PartialFractionForm to_partial_fractions(const RationalApproximant& approx);

/// Throws PoleEncountered within 1e-12 of a real pole.
double eval_partial_fractions(const PartialFractionForm& pf, double t);
std::complex<double> eval_partial_fractions(const PartialFractionForm& pf, std::complex<double> z);

}  // namespace mlf
