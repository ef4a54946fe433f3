#include "mlf/pade.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "mlf/errors.hpp"
#include "mlf/gamma.hpp"

namespace mlf {

namespace {

// Taylor rows beyond the numerator degree, asymptotic rows
struct Layout {
  int d;
  int extra_taylor;
  int asymptotic;
};

Layout layout(PadeOrder order) {
  return order == PadeOrder::k7_2 ? Layout{3, 3, 1} : Layout{7, 5, 3};
}

double distance_to_gamma_pole(double x) {
  if (x > 0.5) return x;
  return std::abs(x - std::round(x));
}

void require_nondegenerate(const MLParams& p) {
  if (distance_to_gamma_pole(p.beta - p.alpha) <= kDegenerateGap) {
    throw DegenerateParameters("beta - alpha = " + std::to_string(p.beta - p.alpha) +
                               " is at a pole of Gamma; the prefactor 1/Gamma(beta-alpha) vanishes "
                               "(derooting with r >= 1 avoids this)");
  }
}

}  // namespace

std::string to_string(PadeOrder order) { return order == PadeOrder::k7_2 ? "7,2" : "13,4"; }

PadeOrder parse_pade_order(std::string_view text) {
  if (text == "7,2" || text == "7/2") return PadeOrder::k7_2;
  if (text == "13,4" || text == "13/4") return PadeOrder::k13_4;
  throw DomainError("unsupported Pade order '" + std::string(text) + "' (expected 7,2 or 13,4)");
}

int numerator_degree(PadeOrder order) { return layout(order).d; }
int denominator_degree(PadeOrder order) { return layout(order).d + 1; }

double moment(const MLParams& params, MomentKind kind, int j) {
  require_nondegenerate(params);
  if (j < 0) throw DomainError("moment index must be >= 0");
  const double sign = (j % 2 == 0) ? -1.0 : 1.0;
  const double denom_arg = kind == MomentKind::a ? params.beta + j * params.alpha
                                                 : params.beta - (j + 1) * params.alpha;
  return sign * gamma_ratio(params.beta - params.alpha, denom_arg);
}

PadeSystem pade_system(const MLParams& params, PadeOrder order) {
  require_nondegenerate(params);
  const Layout L = layout(order);
  const int d = L.d;
  const int n = 2 * d + 1;
  std::vector<double> a(d + L.extra_taylor), b(L.asymptotic + 1);
  for (int j = 0; j < static_cast<int>(a.size()); ++j) a[j] = moment(params, MomentKind::a, j);
  for (int j = 0; j < static_cast<int>(b.size()); ++j) b[j] = moment(params, MomentKind::b, j);

  PadeSystem sys;
  sys.size = n;
  sys.matrix.assign(static_cast<std::size_t>(n) * n, 0.0);
  sys.rhs.assign(n, 0.0);
  auto at = [&](int row, int col) -> double& { return sys.matrix[static_cast<std::size_t>(row) * n + col]; };
  const int q0 = d;  // column of q_0

  int row = 0;
  for (int i = 0; i < d + L.extra_taylor; ++i, ++row) {
    if (i < d) at(row, i) = 1.0;  // p_{i+1}
    for (int c = 0; c <= std::min(i, d); ++c) at(row, q0 + c) = a[i - c];
    if (i == d) sys.rhs[row] = -1.0;
    if (i > d) sys.rhs[row] = -a[i - d - 1];
  }
  for (int e = d - L.asymptotic; e < d; ++e, ++row) {
    at(row, e) = 1.0;  // p_{e+1}
    for (int j = 0; e + j + 1 <= d; ++j) at(row, q0 + e + j + 1) = b[j];
    sys.rhs[row] = -b[d - e];
  }
  return sys;
}

RationalApproximant build_pade(const MLParams& params, PadeOrder order) {
  require_approximant_domain(params);
  const PadeSystem sys = pade_system(params, order);
  const int n = sys.size;
  const int d = numerator_degree(order);

  Eigen::MatrixXd A(n, n);
  Eigen::VectorXd rhs(n);
  for (int i = 0; i < n; ++i) {
    rhs(i) = sys.rhs[i];
    for (int j = 0; j < n; ++j) A(i, j) = sys.matrix[static_cast<std::size_t>(i) * n + j];
  }
  if (!A.allFinite() || !rhs.allFinite()) {
    throw IllConditionedSystem("coefficient system for " + to_string(params) + " has non-finite moments");
  }

  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  Eigen::VectorXd x = lu.solve(rhs);

  // residual in extended precision, for the refinement step and the checks
  auto residual = [&](const Eigen::VectorXd& sol, Eigen::VectorXd& res, Eigen::VectorXd& scale) {
    res.resize(n);
    scale.resize(n);
    for (int i = 0; i < n; ++i) {
      long double acc = rhs(i);
      long double mag = std::abs(rhs(i));
      for (int j = 0; j < n; ++j) {
        acc -= static_cast<long double>(A(i, j)) * sol(j);
        mag += std::abs(static_cast<long double>(A(i, j)) * sol(j));
      }
      res(i) = static_cast<double>(acc);
      scale(i) = static_cast<double>(mag);
    }
  };
  Eigen::VectorXd res, scale;
  residual(x, res, scale);
  x += lu.solve(res);
  residual(x, res, scale);

  double backward = 0.0;
  for (int i = 0; i < n; ++i) {
    if (scale(i) > 0.0) backward = std::max(backward, std::abs(res(i)) / scale(i));
  }
  if (!x.allFinite() || !(backward <= 1e-10)) {
    throw IllConditionedSystem("coefficient system for " + to_string(params) + " order " + to_string(order) +
                               " not solved accurately (backward error " + std::to_string(backward) + ")");
  }

  RationalApproximant r;
  r.params = params;
  r.order = order;
  r.prefactor = rgamma(params.beta - params.alpha);
  r.num_coeffs.assign(x.data(), x.data() + d);
  r.num_coeffs.push_back(1.0);
  r.den_coeffs.assign(x.data() + d, x.data() + n);
  r.den_coeffs.push_back(1.0);
  r.residual = res.lpNorm<Eigen::Infinity>();
  r.backward_error = backward;
  return r;
}

double horner(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> horner(const std::vector<double>& coeffs, std::complex<double> x) {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double eval_rational(const RationalApproximant& approx, double t) {
  const double q = horner(approx.den_coeffs, t);
  if (std::abs(q) < 1e-300) throw PoleEncountered("denominator vanishes at t = " + std::to_string(t));
  return approx.prefactor * horner(approx.num_coeffs, t) / q;
}

std::complex<double> eval_rational(const RationalApproximant& approx, std::complex<double> t) {
  const std::complex<double> q = horner(approx.den_coeffs, t);
  if (std::abs(q) < 1e-300) throw PoleEncountered("denominator vanishes at a complex argument");
  return approx.prefactor * horner(approx.num_coeffs, t) / q;
}

}  // namespace mlf
