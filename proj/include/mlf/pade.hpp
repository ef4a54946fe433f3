#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "mlf/params.hpp"

namespace mlf {

/// The two supported global Pade orders (m, n).
enum class PadeOrder { k7_2, k13_4 };

/// "7,2" or "13,4".
std::string to_string(PadeOrder order);
/// Accepts "7,2" / "13,4" (also "7/2", "13/4"); throws DomainError otherwise.
PadeOrder parse_pade_order(std::string_view text);

/// Degree of the monic numerator (3 or 7); the denominator has one more.
int numerator_degree(PadeOrder order);
int denominator_degree(PadeOrder order);

/// Smallest admissible distance of beta - alpha from a pole of Gamma.
inline constexpr double kDegenerateGap = 1e-8;

enum class MomentKind { a, b };

/// a_j = (-1)^{j+1} Gamma(beta-alpha) / Gamma(beta + j alpha)
/// b_j = (-1)^{j+1} Gamma(beta-alpha) / Gamma(beta - (j+1) alpha)
/// Throws DegenerateParameters when beta - alpha is within kDegenerateGap of
/// a pole of Gamma.
double moment(const MLParams& params, MomentKind kind, int j);

/// prefactor * p(t) / q(t), p and q monic with ascending coefficients,
/// deg q = deg p + 1, prefactor = 1/Gamma(beta - alpha).
struct RationalApproximant {
  MLParams params;
  PadeOrder order = PadeOrder::k13_4;
  double prefactor = 0.0;
  std::vector<double> num_coeffs;  ///< p_1, ..., p_d, 1
  std::vector<double> den_coeffs;  ///< q_0, ..., q_d, 1
  /// max-norm residual of the coefficient system at the returned solution
  double residual = 0.0;
  /// componentwise backward error max_i |b - A x|_i / (|A| |x| + |b|)_i
  double backward_error = 0.0;
};

/// The coefficient system in the unknowns (p_1..p_d, q_0..q_d): Taylor
/// matching at 0 followed by asymptotic matching at infinity.
struct PadeSystem {
  int size = 0;
  std::vector<double> matrix;  ///< row-major size x size
  std::vector<double> rhs;
};

PadeSystem pade_system(const MLParams& params, PadeOrder order);

/// Assembles and solves the coefficient system (LU with partial pivoting and
/// one refinement step). Throws DomainError outside the approximant domain,
/// DegenerateParameters near beta = alpha, IllConditionedSystem when the
/// backward error exceeds 1e-10.
RationalApproximant build_pade(const MLParams& params, PadeOrder order);

/// Approximation of E_{alpha,beta}(-t). Throws PoleEncountered if |q(t)| < 1e-300.
double eval_rational(const RationalApproximant& approx, double t);
std::complex<double> eval_rational(const RationalApproximant& approx, std::complex<double> t);

/// Horner evaluation of an ascending coefficient vector.
double horner(const std::vector<double>& coeffs, double x);
std::complex<double> horner(const std::vector<double>& coeffs, std::complex<double> x);

}  // namespace mlf
