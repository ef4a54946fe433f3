#include <cmath>

#include "eigen_view.hpp"
#include "mlf/errors.hpp"
#include "mlf/matrix.hpp"
#include "mlf/partial_fractions.hpp"

namespace mlf {

using detail::ComplexRowMatrix;
using detail::RowMatrix;
using detail::view;

std::string to_string(MatrixMethod method) {
  switch (method) {
    case MatrixMethod::Inversion: return "inversion";
    case MatrixMethod::LinearSolve: return "linear-solve";
    case MatrixMethod::PartialFraction: return "partial-fraction";
    case MatrixMethod::Diagonalization: return "diagonalization";
  }
  return "?";
}

MatrixMethod parse_matrix_method(std::string_view text) {
  for (MatrixMethod m : kAllMatrixMethods) {
    if (text == to_string(m)) return m;
  }
  throw DomainError("unknown matrix method '" + std::string(text) +
                    "' (expected inversion, linear-solve, partial-fraction or diagonalization)");
}

namespace {

void require_square(const DenseMatrix& a) {
  if (!a.square() || a.rows() == 0) throw DimensionMismatch("matrix argument must be square and non-empty");
}

template <class Lu>
void require_regular(const Lu& lu, double scale, const char* what) {
  const auto pivots = lu.matrixLU().diagonal().cwiseAbs();
  if (!(pivots.minCoeff() > 1e-300 * scale)) {
    throw SingularDenominator(std::string(what) + " is numerically singular");
  }
}

RowMatrix horner_matrix(const std::vector<double>& coeffs, const Eigen::Ref<const RowMatrix>& a) {
  const Eigen::Index n = a.rows();
  RowMatrix m = RowMatrix::Zero(n, n);
  if (coeffs.empty()) return m;
  m.diagonal().setConstant(coeffs.back());
  for (int k = static_cast<int>(coeffs.size()) - 2; k >= 0; --k) {
    m = m * a;
    m.diagonal().array() += coeffs[k];
  }
  return m;
}

DenseMatrix checked(const RowMatrix& m, const char* what) {
  if (!m.allFinite()) throw Overflow(std::string(what) + " produced non-finite entries");
  return detail::from_eigen(m);
}

DenseMatrix rational_by_partial_fractions(const RationalApproximant& approx, const Eigen::Ref<const RowMatrix>& a) {
  const PartialFractionForm pf = to_partial_fractions(approx);
  const Eigen::Index n = a.rows();
  const double scale = a.norm();
  RowMatrix out = RowMatrix::Zero(n, n);
  const ComplexRowMatrix ac = a.cast<std::complex<double>>();
  const ComplexRowMatrix eye = ComplexRowMatrix::Identity(n, n);
  for (std::size_t j = 0; j < pf.poles.size(); ++j) {
    ComplexRowMatrix shifted = ac;
    shifted.diagonal().array() -= pf.poles[j];
    const Eigen::PartialPivLU<ComplexRowMatrix> lu(shifted);
    require_regular(lu, scale + std::abs(pf.poles[j]), "A - s I");
    out += 2.0 * (pf.residues[j] * lu.solve(eye)).real();
  }
  for (std::size_t k = 0; k < pf.real_poles.size(); ++k) {
    RowMatrix shifted = a;
    shifted.diagonal().array() -= pf.real_poles[k];
    const Eigen::PartialPivLU<RowMatrix> lu(shifted);
    require_regular(lu, scale + std::abs(pf.real_poles[k]), "A - s I");
    out += pf.real_residues[k] * lu.solve(RowMatrix::Identity(n, n));
  }
  return checked(out, "partial-fraction evaluation");
}

}  // namespace

DenseMatrix matrix_polynomial(const std::vector<double>& coeffs, const DenseMatrix& a) {
  require_square(a);
  return detail::from_eigen(horner_matrix(coeffs, view(a)));
}

DenseMatrix eval_matrix_rational(const RationalApproximant& approx, const DenseMatrix& a, MatrixMethod method) {
  require_square(a);
  const auto av = view(a);
  switch (method) {
    case MatrixMethod::Inversion:
    case MatrixMethod::LinearSolve: {
      const RowMatrix q = horner_matrix(approx.den_coeffs, av);
      const RowMatrix p = horner_matrix(approx.num_coeffs, av);
      const Eigen::PartialPivLU<RowMatrix> lu(q);
      require_regular(lu, q.norm(), "q(A)");
      if (method == MatrixMethod::Inversion) {
        const RowMatrix q_inv = lu.inverse();
        return checked(approx.prefactor * (q_inv * p), "matrix inversion");
      }
      return checked(approx.prefactor * lu.solve(p), "linear solve");
    }
    case MatrixMethod::PartialFraction:
      return rational_by_partial_fractions(approx, av);
    case MatrixMethod::Diagonalization: {
      const EigenDecomposition e = eigendecompose(a);
      return apply_function(e, [&](std::complex<double> z) {
        return e.symmetric ? std::complex<double>(eval_rational(approx, z.real())) : eval_rational(approx, z);
      });
    }
  }
  throw DomainError("unknown matrix method");
}

DenseMatrix eval_matrix_derooted(const DerootedApproximant& d, const DenseMatrix& a, MatrixMethod method) {
  require_square(a);
  if (method == MatrixMethod::Diagonalization) {
    const EigenDecomposition e = eigendecompose(a);
    return apply_function(e, [&](std::complex<double> z) {
      return e.symmetric ? std::complex<double>(eval_derooted(d, z.real())) : eval_derooted(d, z);
    });
  }
  const DenseMatrix base = eval_matrix_rational(d.base, a, method);
  if (d.r == 0) return base;
  const RowMatrix minus_a = -view(a);
  RowMatrix power = minus_a;
  for (int k = 1; k < d.r; ++k) power = power * minus_a;
  const RowMatrix out = power * view(base) + horner_matrix(d.tail_coeffs, minus_a);
  return checked(out, "derooted matrix evaluation");
}

DenseMatrix eval_matrix_derooted(const MLParams& params, PadeOrder order, int r, const DenseMatrix& a,
                                 MatrixMethod method) {
  return eval_matrix_derooted(build_derooted(params, order, r), a, method);
}

}  // namespace mlf
