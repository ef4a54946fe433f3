#include <cfloat>
#include <cmath>
#include <limits>

#include "eigen_view.hpp"
#include "mlf/errors.hpp"
#include "mlf/matrix.hpp"
#include "mlf/oracle.hpp"

namespace mlf {

using detail::ComplexRowMatrix;
using detail::RowMatrix;
using detail::view;

namespace {

using cd = std::complex<double>;

Eigen::Map<const ComplexRowMatrix> cview(const std::vector<cd>& v, int n) {
  return Eigen::Map<const ComplexRowMatrix>(v.data(), n, n);
}

std::vector<cd> flatten(const ComplexRowMatrix& m) { return std::vector<cd>(m.data(), m.data() + m.size()); }

}  // namespace

EigenDecomposition eigendecompose(const DenseMatrix& a, double condition_limit) {
  if (!a.square() || a.rows() == 0) throw DimensionMismatch("matrix argument must be square and non-empty");
  EigenDecomposition e;
  e.n = a.rows();
  if (is_symmetric(a)) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(view(a));
    if (solver.info() != Eigen::Success) throw IllConditionedEigenbasis("symmetric eigensolver did not converge");
    e.symmetric = true;
    for (Eigen::Index i = 0; i < e.n; ++i) e.eigenvalues.emplace_back(solver.eigenvalues()(i), 0.0);
    const ComplexRowMatrix z = solver.eigenvectors().cast<cd>();
    e.z = flatten(z);
    e.z_inv = flatten(z.transpose());
    e.condition = 1.0;
    return e;
  }
  const Eigen::EigenSolver<Eigen::MatrixXd> solver(view(a));
  if (solver.info() != Eigen::Success) throw IllConditionedEigenbasis("eigensolver did not converge");
  const ComplexRowMatrix z = solver.eigenvectors();
  const Eigen::JacobiSVD<ComplexRowMatrix> svd(z);
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  e.condition = smallest > 0.0 ? sv(0) / smallest : std::numeric_limits<double>::infinity();
  if (!(e.condition <= condition_limit)) {
    throw IllConditionedEigenbasis("eigenvector basis condition " + std::to_string(e.condition) +
                                   " exceeds the limit " + std::to_string(condition_limit));
  }
  for (Eigen::Index i = 0; i < e.n; ++i) e.eigenvalues.push_back(solver.eigenvalues()(i));
  e.z = flatten(z);
  e.z_inv = flatten(z.partialPivLu().inverse());
  return e;
}

DenseMatrix apply_function(const EigenDecomposition& e, const std::function<cd(cd)>& f) {
  Eigen::VectorXcd fd(e.n);
  for (int i = 0; i < e.n; ++i) fd(i) = f(e.eigenvalues[i]);
  const ComplexRowMatrix out = cview(e.z, e.n) * fd.asDiagonal() * cview(e.z_inv, e.n);
  const RowMatrix re = out.real();
  if (!re.allFinite()) throw Overflow("matrix function produced non-finite entries");
  return detail::from_eigen(re);
}

std::vector<double> apply_function(const EigenDecomposition& e, const std::function<cd(cd)>& f,
                                   const std::vector<double>& x) {
  if (x.size() != static_cast<std::size_t>(e.n)) throw DimensionMismatch("vector length differs");
  Eigen::VectorXcd y = cview(e.z_inv, e.n) * Eigen::Map<const Eigen::VectorXd>(x.data(), e.n).cast<cd>();
  for (int i = 0; i < e.n; ++i) y(i) *= f(e.eigenvalues[i]);
  const Eigen::VectorXd out = (cview(e.z, e.n) * y).real();
  if (!out.allFinite()) throw Overflow("matrix function produced non-finite entries");
  return std::vector<double>(out.data(), out.data() + out.size());
}

namespace {

using LRowMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr int kMaxTaylorTerms = 2000;

// Taylor series of E_{alpha,beta}(-A) in extended precision. The returned
// bound covers truncation (terms decreasing at least geometrically by 1/2
// past the cut) and product rounding (k n u ||A||^k for the k-th power).
MatrixReference taylor_reference(const MLParams& params, const DenseMatrix& a, double accuracy) {
  const int n = a.rows();
  const long double norm = view(a).norm();
  const LRowMatrix minus_a = -view(a).cast<long double>();
  LRowMatrix power = LRowMatrix::Identity(n, n);
  LRowMatrix sum = LRowMatrix::Zero(n, n);
  long double rounding = 0;
  long double truncation = INFINITY;
  const long double log_norm = norm > 0 ? std::log(norm) : -INFINITY;
  for (int k = 0; k < kMaxTaylorTerms; ++k) {
    const long double x = static_cast<long double>(params.alpha) * k + params.beta;
    const long double log_bound = k * log_norm - std::lgamma(x);
    const long double bound = std::exp(log_bound);
    const long double next_ratio =
        std::exp(log_norm + std::lgamma(x) - std::lgamma(x + static_cast<long double>(params.alpha)));
    if (k > 0 && next_ratio <= 0.5L && 2 * bound <= accuracy * 1e-3L) {
      truncation = 2 * bound;
      break;
    }
    sum += power / std::tgamma(x);
    rounding += (k + 1) * n * LDBL_EPSILON * bound;
    if (norm == 0) {
      truncation = 0;
      break;
    }
    power = power * minus_a;
  }
  MatrixReference out;
  out.est_abs_error = static_cast<double>(rounding + truncation);
  if (!(out.est_abs_error <= accuracy)) {
    throw IllConditionedEigenbasis("matrix is not diagonalizable within the condition limit and its Taylor "
                                   "series cannot reach the requested accuracy");
  }
  out.value = detail::from_eigen(sum.cast<double>());
  return out;
}

}  // namespace

MatrixReference matrix_reference_report(const MLParams& params, const DenseMatrix& a, double accuracy) {
  if (!a.square() || a.rows() == 0) throw DimensionMismatch("matrix argument must be square and non-empty");
  const EigenDecomposition e = eigendecompose(a, std::numeric_limits<double>::infinity());
  if (!(e.condition <= kEigenbasisConditionLimit)) {
    MatrixReference out = taylor_reference(params, a, accuracy);
    out.eigenbasis_condition = e.condition;
    return out;
  }
  double radius = 0.0;
  for (const cd& l : e.eigenvalues) radius = std::max(radius, std::abs(l));
  const MlfOracle oracle(params, std::max(radius, 1.0), accuracy / e.condition);
  double err = 0.0;
  MatrixReference out;
  out.value = apply_function(e, [&](cd l) {
    if (l.imag() == 0.0 && l.real() >= 0.0) {
      const OracleResult r = oracle.negative(l.real());
      err = std::max(err, r.est_abs_error);
      return cd(r.value);
    }
    const ComplexOracleResult r = oracle.at(-l);
    err = std::max(err, r.est_abs_error);
    return r.value;
  });
  out.diagonalized = true;
  out.eigenbasis_condition = e.condition;
  out.est_abs_error = e.condition * err;
  return out;
}

DenseMatrix matrix_reference(const MLParams& params, const DenseMatrix& a, double accuracy) {
  return matrix_reference_report(params, a, accuracy).value;
}

}  // namespace mlf
