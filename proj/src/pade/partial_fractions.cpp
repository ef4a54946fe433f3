#include "mlf/partial_fractions.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "mlf/errors.hpp"

namespace mlf {

namespace {

using cd = std::complex<double>;

constexpr double kRealPoleImag = 1e-8;
constexpr double kRepeatedPoleGap = 1e-8;

// Parlett-Reinsch diagonal balancing by powers of two
void balance(Eigen::MatrixXd& m) {
  const int n = static_cast<int>(m.rows());
  bool converged = false;
  while (!converged) {
    converged = true;
    for (int i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(m(j, i));
        r += std::abs(m(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double f = 1.0;
      while (c < r / 2) {
        c *= 4;
        f *= 2;
      }
      while (c >= 2 * r) {
        c /= 4;
        f /= 2;
      }
      if ((c + r) / f < 0.95 * s) {
        converged = false;
        m.row(i) /= f;
        m.col(i) *= f;
      }
    }
  }
}

// Minimal complex arithmetic in binary128 (soft-float, no libquadmath
// needed). The denominators have coefficients spanning many magnitudes, so
// roots evaluated in long double are still off by a few ulps, and the
// residues inherit that error amplified by the root sensitivity.
struct Cq {
  __float128 re = 0, im = 0;
};

Cq operator+(Cq a, Cq b) { return {a.re + b.re, a.im + b.im}; }
Cq operator-(Cq a, Cq b) { return {a.re - b.re, a.im - b.im}; }
Cq operator*(Cq a, Cq b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cq operator/(Cq a, Cq b) {
  const __float128 den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
__float128 norm2(Cq a) { return a.re * a.re + a.im * a.im; }

Cq horner_q(const std::vector<double>& coeffs, Cq x) {
  Cq acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + Cq{*it, 0};
  return acc;
}

// q'(x); the k * q_k products are formed in binary128 as well
Cq horner_deriv_q(const std::vector<double>& coeffs, Cq x) {
  Cq acc;
  for (std::size_t k = coeffs.size() - 1; k >= 1; --k) {
    acc = acc * x + Cq{static_cast<__float128>(k) * coeffs[k], 0};
  }
  return acc;
}

// Newton in binary128
Cq polish(const std::vector<double>& coeffs, cd z0) {
  Cq z{z0.real(), z0.imag()};
  __float128 fz = norm2(horner_q(coeffs, z));
  for (int it = 0; it < 8 && fz > 0; ++it) {
    const Cq qd = horner_deriv_q(coeffs, z);
    if (norm2(qd) == 0) break;
    const Cq next = z - horner_q(coeffs, z) / qd;
    const __float128 fn = norm2(horner_q(coeffs, next));
    if (!(fn < fz)) break;
    z = next;
    fz = fn;
  }
  return z;
}

cd to_cd(Cq z) { return {static_cast<double>(z.re), static_cast<double>(z.im)}; }

}  // namespace

std::vector<cd> monic_roots(const std::vector<double>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1 || coeffs.back() != 1.0) throw DomainError("monic_roots expects a monic polynomial of degree >= 1");

  // roots of q(sigma u) / sigma^n, with sigma balancing the extreme coefficients
  double sigma = std::abs(coeffs[0]) > 0.0 ? std::pow(std::abs(coeffs[0]), 1.0 / n) : 1.0;
  if (!(sigma > 0.0) || !std::isfinite(sigma)) sigma = 1.0;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -coeffs[i] / std::pow(sigma, n - i);
  balance(comp);

  const Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  if (es.info() != Eigen::Success) throw IllConditionedSystem("companion eigenvalue iteration failed");
  std::vector<cd> roots;
  roots.reserve(n);
  for (int i = 0; i < n; ++i) {
    roots.push_back(to_cd(polish(coeffs, sigma * es.eigenvalues()(i))));
  }
  std::sort(roots.begin(), roots.end(), [](cd x, cd y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return roots;
}

PartialFractionForm to_partial_fractions(const RationalApproximant& approx) {
  const auto roots = monic_roots(approx.den_coeffs);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (std::abs(roots[i] - roots[j]) < kRepeatedPoleGap * std::max(1.0, std::abs(roots[i]))) {
        throw RepeatedPoles("denominator has a repeated root near " + std::to_string(roots[i].real()));
      }
    }
  }

  auto residue = [&](cd s0) {
    // re-polish so the residue sees the extended-precision root
    const Cq s = polish(approx.den_coeffs, s0);
    return to_cd(Cq{approx.prefactor, 0} * horner_q(approx.num_coeffs, s) / horner_deriv_q(approx.den_coeffs, s));
  };

  PartialFractionForm pf;
  pf.prefactor = approx.prefactor;
  int lower = 0;
  for (const cd s : roots) {
    if (std::abs(s.imag()) < kRealPoleImag) {
      pf.real_pole_fallback = true;
      pf.real_poles.push_back(s.real());
      pf.real_residues.push_back(residue(cd(s.real(), 0.0)).real());
    } else if (s.imag() > 0.0) {
      pf.poles.push_back(s);
      pf.residues.push_back(residue(s));
    } else {
      ++lower;
    }
  }
  if (lower != static_cast<int>(pf.poles.size())) {
    throw IllConditionedSystem("denominator roots do not pair into conjugates");
  }
  return pf;
}

double eval_partial_fractions(const PartialFractionForm& pf, double t) {
  cd acc = 0.0;
  for (std::size_t i = 0; i < pf.poles.size(); ++i) acc += pf.residues[i] / (t - pf.poles[i]);
  double out = 2.0 * acc.real();
  for (std::size_t k = 0; k < pf.real_poles.size(); ++k) {
    const double gap = t - pf.real_poles[k];
    if (std::abs(gap) < 1e-12) throw PoleEncountered("t = " + std::to_string(t) + " is at a real pole");
    out += pf.real_residues[k] / gap;
  }
  return out;
}

cd eval_partial_fractions(const PartialFractionForm& pf, cd z) {
  cd acc = 0.0;
  for (std::size_t i = 0; i < pf.poles.size(); ++i) {
    acc += pf.residues[i] / (z - pf.poles[i]) + std::conj(pf.residues[i]) / (z - std::conj(pf.poles[i]));
  }
  for (std::size_t k = 0; k < pf.real_poles.size(); ++k) {
    const cd gap = z - pf.real_poles[k];
    if (std::abs(gap) < 1e-12) throw PoleEncountered("argument is at a real pole");
    acc += pf.real_residues[k] / gap;
  }
  return acc;
}

}  // namespace mlf
