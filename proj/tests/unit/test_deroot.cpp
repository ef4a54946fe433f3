#include <doctest.h>

#include <cfloat>
#include <cmath>

#include "mlf/derooted.hpp"
#include "mlf/errors.hpp"
#include "mlf/gamma.hpp"
#include "mlf/oracle.hpp"

using namespace mlf;

namespace {

const BoundaryTable& table() { return BoundaryTable::embedded(); }

}  // namespace

TEST_CASE("boundary table data") {
  const auto& t = table();
  REQUIRE(t.alphas.size() == 21);
  CHECK(t.phi.front() == 1.0);
  CHECK(t.psi.front() == 1.0);
  CHECK(t.phi.back() == 3.0);
  CHECK(t.psi.back() == 3.64686);
  for (std::size_t i = 1; i < t.alphas.size(); ++i) {
    CHECK(t.alphas[i] > t.alphas[i - 1]);
    CHECK(t.phi[i] > t.phi[i - 1]);
    CHECK(t.psi[i] > t.psi[i - 1]);
    CHECK(t.phi[i] < t.psi[i]);
  }
  const std::string csv = t.to_csv();
  CHECK(csv.rfind("alpha,phi,psi\n", 0) == 0);
  CHECK(csv.find("\n1.5,1.79365,1.99685\n") != std::string::npos);
  CHECK(csv.find("\n2,3,3.64686\n") != std::string::npos);
}

TEST_CASE("boundary lookup") {
  CHECK(boundary_lookup(table(), 1.5, Boundary::phi) == 1.79365);
  CHECK(boundary_lookup(table(), 2.0, Boundary::psi) == 3.64686);
  CHECK(boundary_lookup(table(), 1.0, Boundary::phi) == 1.0);
  CHECK(boundary_lookup(table(), 1.525, Boundary::phi) == doctest::Approx(1.84469).epsilon(1e-12));
  CHECK_THROWS_AS(boundary_lookup(table(), 0.99, Boundary::phi), OutOfRange);
  CHECK_THROWS_AS(boundary_lookup(table(), 2.01, Boundary::psi), OutOfRange);
  CHECK(parse_boundary("psi") == Boundary::psi);
  CHECK_THROWS_AS(parse_boundary("chi"), DomainError);
}

TEST_CASE("region classification") {
  CHECK(classify_region({1.9, 1.0}) == Region::A);
  CHECK(classify_region({1.2, 2.0}) == Region::D);
  CHECK(classify_region({1.2, 2.2}) == Region::F);
  CHECK(classify_region({1.5, 1.9}) == Region::B);
  CHECK(classify_region({1.5, 2.0}) == Region::D);
  CHECK(classify_region({1.9, 3.0}) == Region::C);
  // ties go to the side without roots
  CHECK(classify_region({1.5, 1.79365}) == Region::B);
  CHECK(classify_region({1.5, 1.79365 - 5e-13}) == Region::B);
  CHECK(classify_region({1.5, 1.79365 - 1e-9}) == Region::A);
  CHECK(classify_region({1.5, 1.99685}) == Region::D);
  CHECK(classify_region({2.0, 3.0}) == Region::C);
  CHECK(to_string(Region::F) == "F");
  CHECK_THROWS_AS(classify_region({0.5, 1.0}), DomainError);
}

TEST_CASE("classification agrees with root counting on a coarse grid") {
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const MLParams p{1.1 + 0.2 * i, 1.0 + 0.7 * j};
      const Region reg = classify_region(p);
      const bool f_roots = has_real_root(p, 100.0, false);
      const bool d_roots = has_real_root(p, 100.0, true);
      CAPTURE(p.alpha);
      CAPTURE(p.beta);
      CHECK(f_roots == (reg == Region::A));
      CHECK(d_roots == (reg == Region::A || reg == Region::B || reg == Region::C));
    }
  }
}

TEST_CASE("boundary recomputation") {
  CHECK(compute_boundary(1.0 + 1e-6, Boundary::phi, 1e-3) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(std::abs(compute_boundary(2.0, Boundary::phi, 1e-3) - 3.0) <= 1e-3);
  CHECK(std::abs(compute_boundary(1.5, Boundary::phi, 1e-3) - 1.79365) <= 5e-3);
  CHECK(std::abs(compute_boundary(1.5, Boundary::psi, 1e-3) - 1.99685) <= 5e-3);
  for (double a : {1.3, 1.7, 1.95}) {
    CHECK(compute_boundary(a, Boundary::phi, 1e-3) < compute_boundary(a, Boundary::psi, 1e-3));
  }
  BoundaryOptions narrow;
  narrow.beta_hi = 2.0;
  CHECK_THROWS_AS(compute_boundary(1.9, Boundary::phi, 1e-3, narrow), BracketFailure);
  CHECK_THROWS_AS(compute_boundary(1.5, Boundary::phi, 1e-5), DomainError);
}

TEST_CASE("monotone decrease above psi") {
  for (const MLParams p : {MLParams{1.2, 1.4}, MLParams{1.5, 2.0}, MLParams{1.5, 3.0}, MLParams{1.9, 3.3},
                           MLParams{2.0, 3.7}, MLParams{1.7, 2.6}}) {
    REQUIRE(p.beta >= boundary_lookup(table(), p.alpha, Boundary::psi));
    const MlfOracle o(p, 50.0, 1e-14);
    double prev = o.negative(0.0).value;
    for (int i = 1; i < 512; ++i) {
      const double v = o.negative(50.0 * i / 511).value;
      CAPTURE(p.alpha);
      CAPTURE(p.beta);
      CAPTURE(i);
      CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("derooted construction and evaluation") {
  const auto d0 = build_derooted({1.9, 1.0}, PadeOrder::k13_4, 0);
  CHECK(d0.tail_coeffs.empty());
  const auto plain = build_pade({1.9, 1.0}, PadeOrder::k13_4);
  for (double t : {0.0, 0.3, 2.5, 17.0, 150.0}) CHECK(eval_derooted(d0, t) == eval_rational(plain, t));

  const auto d8 = build_derooted({1.9, 1.0}, PadeOrder::k13_4, 8);
  CHECK(d8.base.params.beta == 1.0 + 1.9 * 8);
  CHECK(d8.tail_coeffs.size() == 8);
  CHECK(eval_derooted(d8, 0.0) == rgamma(1.0));

  const auto d3 = build_derooted({1.5, 2.5}, PadeOrder::k7_2, 3);
  CHECK(eval_derooted(d3, 0.0) == rgamma(2.5));

  const auto d5 = build_derooted({1.9, 1.0}, PadeOrder::k13_4, 5);
  CHECK(pointwise_error(d5, 10.0, 1e-14) <= 1e-6);
  CHECK(pointwise_error(d5, 0.0, 1e-14) <= 1e-14);

  const auto deg = build_derooted({1.5, 1.5}, PadeOrder::k13_4, 1);
  CHECK(deg.base.params.beta == 3.0);
  CHECK_THROWS_AS(build_derooted({1.5, 1.5}, PadeOrder::k13_4, 0), DegenerateParameters);

  const auto d12 = build_derooted({1.2, 1.0}, PadeOrder::k13_4, 0);
  CHECK(pointwise_error(d12, 2.0, 1e-14) < 1e-2);

  CHECK(eval_derooted(d5, std::complex<double>(10.0, 0.0)).real() == doctest::Approx(eval_derooted(d5, 10.0)));
  const auto d40 = build_derooted({1.9, 1.0}, PadeOrder::k13_4, 40);
  CHECK_THROWS_AS(eval_derooted(d40, 1e12), Overflow);
}

TEST_CASE("derooting identity with the oracle as base") {
  // In double precision the identity is limited by cancellation between
  // (-t)^r E_shift and the tail; the bound is 1e-12 relative plus the rounding
  // of the largest term plus the oracle error carried through t^r.
  for (const MLParams p : {MLParams{1.2, 1.0}, MLParams{1.5, 1.7}, MLParams{1.9, 1.0}, MLParams{1.99, 2.9}}) {
    for (int r = 1; r <= 10; ++r) {
      for (double t : {0.0, 0.5, 3.0, 10.0, 30.0}) {
        const auto l = mlf_oracle(p, t, 1e-15);
        const auto sh = mlf_oracle({p.alpha, p.beta + p.alpha * r}, t, 1e-15);
        const double lhs = l.value, shifted = sh.value;
        const double lead = std::pow(-t, r) * shifted;
        const double rhs = lead + poly_tail(p, r, -t);
        double scale = std::abs(lead);
        for (int k = 0; k < r; ++k) scale = std::max(scale, std::pow(t, k) * rgamma(p.alpha * k + p.beta));
        CAPTURE(p.alpha);
        CAPTURE(r);
        CAPTURE(t);
        const double carried = l.est_abs_error + std::pow(t, r) * sh.est_abs_error;
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs) + 16 * r * DBL_EPSILON * scale + carried);
      }
    }
  }
}

TEST_CASE("r selection") {
  CHECK(select_r({1.9, 1.0}, PadeOrder::k13_4, table(), BoundaryMode{}) == 2);
  CHECK(select_r({1.5, 2.5}, PadeOrder::k13_4, table(), BoundaryMode{}) == 0);
  CHECK(select_r({1.2, 1.0}, PadeOrder::k7_2, table(), BoundaryMode{}) == 1);

  // horizon mode with t_max the argument of E
  int roots = 0;
  const auto cands = horizon_candidates({1.9, 1.0}, PadeOrder::k13_4, 20.0, {}, &roots);
  const int r20 = select_r({1.9, 1.0}, PadeOrder::k13_4, table(), HorizonMode{20.0});
  CHECK(r20 <= 15);
  CHECK(cands.back().r == r20);
  CHECK(cands.back().sign_changes == roots);
  CHECK(roots == 2);

  // the plasma horizon t = 20 in physical time is the argument 20^alpha
  const double t_phys = std::pow(20.0, 1.9);
  const auto c2 = horizon_candidates({1.9, 1.0}, PadeOrder::k13_4, t_phys, {}, &roots);
  CHECK(c2.back().r <= 15);
  CHECK(c2.back().sign_changes == roots);
  CHECK(roots >= 4);

  SelectionOptions tight;
  tight.max_r = 1;
  tight.target = 1e-12;
  CHECK_THROWS_AS(select_r({1.9, 1.0}, PadeOrder::k13_4, table(), HorizonMode{20.0}, tight), SelectionExhausted);
}

TEST_CASE("R^{7,2} has exactly one root below phi" * doctest::should_fail()) {
  // Fails near beta ~ alpha (e.g. alpha = 1.2, beta = 1.2449: sign changes near
  // 4.9 and 46.4, confirmed with a 50-digit solve); kept as stated.
  int violations = 0;
  for (int i = 0; i < 50; ++i) {
    for (int j = 0; j < 50; ++j) {
      const MLParams p{1.0 + (i + 1.0) / 50, 1.0 + 3.0 * j / 49};
      if (std::abs(p.beta - p.alpha) < 1e-3 || std::abs(p.beta - p.alpha + 1) < 1e-3) continue;
      if (p.beta >= boundary_lookup(table(), p.alpha, Boundary::phi)) continue;
      const auto a = build_pade(p, PadeOrder::k7_2);
      const int n = count_sign_changes([&](double t) { return eval_rational(a, t); }, 200.0);
      violations += n != 1;
      CHECK(n == 1);
    }
  }
  MESSAGE("grid points below phi without exactly one sign change: " << violations);
}

TEST_CASE("R^{7,2} counterexample with two roots") {
  const MLParams p{1.2, 1.0 + 3.0 * 4 / 49};
  const auto a = build_pade(p, PadeOrder::k7_2);
  const auto scan = scan_roots([&](double t) { return eval_rational(a, t); }, 200.0);
  REQUIRE(scan.roots.size() == 2);
  CHECK(scan.roots[0] == doctest::Approx(4.9).epsilon(2e-2));
  CHECK(scan.roots[1] == doctest::Approx(46.4).epsilon(2e-3));
}
