#pragma once

#include <complex>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "mlf/dense.hpp"
#include "mlf/derooted.hpp"
#include "mlf/pade.hpp"

namespace mlf {

enum class MatrixMethod { Inversion, LinearSolve, PartialFraction, Diagonalization };

/// "inversion", "linear-solve", "partial-fraction", "diagonalization"
std::string to_string(MatrixMethod method);
MatrixMethod parse_matrix_method(std::string_view text);
inline constexpr MatrixMethod kAllMatrixMethods[] = {MatrixMethod::Inversion, MatrixMethod::LinearSolve,
                                                     MatrixMethod::PartialFraction, MatrixMethod::Diagonalization};

/// Largest eigenvector-basis condition number accepted for diagonalization.
inline constexpr double kEigenbasisConditionLimit = 1e10;

/// A = Z diag(lambda) Z^{-1}. Symmetric input uses the symmetric solver
/// (orthonormal Z, condition 1).
struct EigenDecomposition {
  int n = 0;
  bool symmetric = false;
  std::vector<std::complex<double>> eigenvalues;
  std::vector<std::complex<double>> z;      ///< row-major n x n
  std::vector<std::complex<double>> z_inv;  ///< row-major n x n
  double condition = 1.0;                   ///< 2-norm condition of Z
};

/// Throws IllConditionedEigenbasis when the condition exceeds the limit.
EigenDecomposition eigendecompose(const DenseMatrix& a, double condition_limit = kEigenbasisConditionLimit);

/// Z diag(f(lambda_i)) Z^{-1}, real part (f is assumed to commute with
/// conjugation).
DenseMatrix apply_function(const EigenDecomposition& e,
                           const std::function<std::complex<double>(std::complex<double>)>& f);
/// Z diag(f(lambda_i)) Z^{-1} x without forming the matrix.
std::vector<double> apply_function(const EigenDecomposition& e,
                                   const std::function<std::complex<double>(std::complex<double>)>& f,
                                   const std::vector<double>& x);

/// prefactor q(A)^{-1} p(A), approximating E_{alpha,beta}(-A). Throws
/// SingularDenominator, IllConditionedEigenbasis, DimensionMismatch.
DenseMatrix eval_matrix_rational(const RationalApproximant& approx, const DenseMatrix& a, MatrixMethod method);

/// (-A)^r R_{alpha,beta+alpha r}(A) + P^{r-1}(-A); Diagonalization evaluates
/// the derooted scalar approximant per eigenvalue.
DenseMatrix eval_matrix_derooted(const DerootedApproximant& d, const DenseMatrix& a, MatrixMethod method);
DenseMatrix eval_matrix_derooted(const MLParams& params, PadeOrder order, int r, const DenseMatrix& a,
                                 MatrixMethod method);

/// Horner evaluation of an ascending coefficient vector at a matrix.
DenseMatrix matrix_polynomial(const std::vector<double>& coeffs, const DenseMatrix& a);

/// Reference E_{alpha,beta}(-A). Diagonalizable A within the condition
/// limit: oracle at each eigenvalue. Otherwise: extended-precision Taylor
/// series in A, accepted only when its rounding bound
/// n eps E_{alpha,beta}(||A||_F) is below `accuracy`; otherwise
/// IllConditionedEigenbasis. Oracle failures propagate.
struct MatrixReference {
  DenseMatrix value;
  bool diagonalized = false;
  double eigenbasis_condition = 0.0;  ///< of the attempted decomposition
  double est_abs_error = 0.0;
};
MatrixReference matrix_reference_report(const MLParams& params, const DenseMatrix& a, double accuracy);
DenseMatrix matrix_reference(const MLParams& params, const DenseMatrix& a, double accuracy);

}  // namespace mlf
