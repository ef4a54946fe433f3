#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "mlf/errors.hpp"
#include "mlf/gamma.hpp"
#include "mlf/golden.hpp"
#include "mlf/oracle.hpp"
#include "mlf/roots.hpp"

using namespace mlf;

namespace {

const double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("rgamma special values") {
  CHECK(rgamma(1.0) == 1.0);
  CHECK(rgamma(0.0) == 0.0);
  CHECK(rgamma(-3.0) == 0.0);
  CHECK(rgamma(0.5) == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-15));
  CHECK(rgamma(2.5) == doctest::Approx(1.0 / 1.3293403881791355).epsilon(1e-15));
  CHECK(rgamma(-0.5) == doctest::Approx(-1.0 / (2.0 * std::sqrt(kPi))).epsilon(1e-14));
  // near and past the overflow point of Gamma
  CHECK(rgamma(171.5) > 0.0);
  CHECK(rgamma(171.5) < 1e-300);
  CHECK(rgamma(200.0) == 0.0);
  CHECK(rgamma(-150.5) < 0.0);
  CHECK(std::isfinite(rgamma(-150.5)));
}

TEST_CASE("rgamma agrees with factorials") {
  double fact = 1.0;
  for (int n = 1; n < 25; ++n) {
    CHECK(rgamma(n + 1.0) * fact * n == doctest::Approx(1.0).epsilon(1e-14));
    fact *= n;
  }
}

TEST_CASE("gamma_ratio") {
  CHECK(gamma_ratio(-0.5, 1.0) == doctest::Approx(-2.0 * std::sqrt(kPi)).epsilon(1e-14));
  CHECK(gamma_ratio(3.0, 0.0) == 0.0);
  // large arguments: Gamma(300.5)/Gamma(300) ~ sqrt(300)
  CHECK(gamma_ratio(300.5, 300.0) == doctest::Approx(std::sqrt(300.0)).epsilon(1e-3));
}

TEST_CASE("poly_tail") {
  CHECK(poly_tail({1.5, 1.0}, 0, 7.0) == 0.0);
  CHECK(poly_tail({1.5, 1.0}, 1, 5.0) == 1.0);
  const double expected = 1.0 - 2.0 / 1.3293403881791355 + 4.0 / 6.0;
  CHECK(poly_tail({1.5, 1.0}, 3, -2.0) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(poly_tail({1.5, 1.0}, 3, -2.0) == doctest::Approx(0.1621612).epsilon(1e-6));
}

TEST_CASE("oracle closed forms") {
  auto e = mlf_oracle({1.0, 1.0}, 1.0, 1e-14);
  CHECK(e.value == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(e.est_abs_error <= 1e-14);
  CHECK(e.working_precision_bits >= 64);
  CHECK(mlf_oracle({2.0, 1.0}, 4.0, 1e-14).value == doctest::Approx(std::cos(2.0)).epsilon(1e-13));
  CHECK(mlf_oracle({1.5, 2.0}, 0.0, 1e-14).value == 1.0);
  CHECK(mlf_oracle({1.5, 2.5}, 0.0, 1e-14).value == doctest::Approx(0.7522527780636751).epsilon(1e-15));
}

TEST_CASE("oracle special-case reductions over [0,10]") {
  MlfOracle exp_oracle({1.0, 1.0}, 10.0, 1e-13);
  MlfOracle cos_oracle({2.0, 1.0}, 100.0, 1e-13);
  for (int i = 0; i <= 100; ++i) {
    const double t = 0.1 * i;
    CHECK(std::abs(exp_oracle.negative(t).value - std::exp(-t)) <= 1e-13);
    CHECK(std::abs(cos_oracle.negative(t * t).value - std::cos(t)) <= 2e-13);
  }
}

TEST_CASE("oracle against golden file") {
  const auto records = read_golden_file(std::string(MLF_TEST_DATA_DIR) + "/golden_mlf.txt");
  REQUIRE(records.size() >= 10);
  bool saw_anchor = false;
  for (const auto& r : records) {
    CAPTURE(r.alpha);
    CAPTURE(r.beta);
    CAPTURE(r.t);
    const auto res = mlf_oracle({r.alpha, r.beta}, r.t, 1e-15);
    CHECK(std::abs(res.value - r.value) <= 1e-15 + 2.3e-16 * std::abs(r.value));
    if (r.alpha == 1.5 && r.beta == 1.0 && r.t == 2.0) saw_anchor = true;
  }
  CHECK(saw_anchor);
}

TEST_CASE("golden file round trip") {
  std::vector<GoldenRecord> in{{1.5, 1.0, 2.0, 0.0294306856028264717, 1e-40}};
  std::stringstream buf;
  write_golden(buf, in, {"test"});
  CHECK(buf.str().rfind("# test\n", 0) == 0);
  const auto out = read_golden(buf);
  REQUIRE(out.size() == 1);
  CHECK(out[0].value == in[0].value);
  CHECK(out[0].est_error == in[0].est_error);
  std::stringstream bad("1.5 1.0 oops\n");
  CHECK_THROWS_AS(read_golden(bad), IOError);
}

TEST_CASE("oracle large-argument regime matches the series") {
  // both regimes at the same argument: force the series with a wide
  // series_range and the expansion with a narrow one
  OracleConfig series_cfg;
  series_cfg.series_range = 1e4;
  OracleConfig asym_cfg;
  asym_cfg.series_range = 10.0;
  for (const MLParams p : {MLParams{1.5, 1.0}, MLParams{1.9, 1.0}, MLParams{1.2, 2.2}, MLParams{1.9, 4.8}}) {
    for (double t : {300.0, 600.0, 1000.0}) {
      CAPTURE(p.alpha);
      CAPTURE(t);
      const double a = mlf_oracle(p, t, 1e-13, series_cfg).value;
      const double b = mlf_oracle(p, t, 1e-13, asym_cfg).value;
      CHECK(std::abs(a - b) <= 2e-13);
    }
  }
}

TEST_CASE("complex oracle") {
  const auto r = mlf_oracle_at({1.0, 1.0}, {0.5, 2.0}, 1e-14);
  const auto expected = std::exp(std::complex<double>(0.5, 2.0));
  CHECK(std::abs(r.value - expected) <= 1e-13);
  const auto real_axis = mlf_oracle_at({1.7, 1.3}, {-3.0, 0.0}, 1e-14);
  CHECK(real_axis.value.real() == doctest::Approx(mlf_oracle({1.7, 1.3}, 3.0, 1e-14).value).epsilon(1e-13));
  CHECK(std::abs(real_axis.value.imag()) <= 1e-14);
}

TEST_CASE("oracle precision ceiling") {
  OracleConfig cfg;
  cfg.max_bits = 80;
  CHECK_THROWS_AS(mlf_oracle({1.9, 1.0}, 300.0, 1e-12, cfg), PrecisionExhausted);
  CHECK_THROWS_AS(mlf_oracle({1.9, 1.0}, 1.0, -1.0), DomainError);
  CHECK_THROWS_AS(mlf_oracle({1.9, 1.0}, -1.0, 1e-10), DomainError);
}

TEST_CASE("derivative oracle") {
  CHECK(mlf_derivative_oracle({1.5, 1.0}, 0.0, 1e-14).value ==
        doctest::Approx(-0.7522527780636751).epsilon(1e-14));
  CHECK(mlf_derivative_oracle({1.0, 1.0}, 1.0, 1e-14).value ==
        doctest::Approx(-std::exp(-1.0)).epsilon(1e-13));

  const double h = 1e-6;
  const MLParams p{1.7, 1.3};
  const double fd = (mlf_oracle(p, 3.0 + h, 1e-15).value - mlf_oracle(p, 3.0 - h, 1e-15).value) / (2 * h);
  CHECK(std::abs(mlf_derivative_oracle(p, 3.0, 1e-14).value - fd) <= 1e-8);
}

TEST_CASE("derivative oracle vs central differences at random points") {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> ua(1.05, 2.0), ub(1.0, 4.0), ut(0.1, 30.0);
  const double h = 1e-6;
  for (int i = 0; i < 100; ++i) {
    const MLParams p{ua(rng), ub(rng)};
    const double t = ut(rng);
    CAPTURE(p.alpha);
    CAPTURE(p.beta);
    CAPTURE(t);
    const double fd = (mlf_oracle(p, t + h, 1e-15).value - mlf_oracle(p, t - h, 1e-15).value) / (2 * h);
    CHECK(std::abs(mlf_derivative_oracle(p, t, 1e-14).value - fd) <= 1e-8);
  }
}

TEST_CASE("derivative is negative at the origin") {
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j <= 10; ++j) {
      const MLParams p{1.0 + 0.1 * i + (i == 0 ? 0.01 : 0.0), 1.0 + 0.3 * j};
      CHECK(mlf_derivative_oracle(p, 0.0, 1e-14).value < 0.0);
    }
  }
}

TEST_CASE("recursive identity in working precision") {
  for (const MLParams p : {MLParams{1.5, 1.0}, MLParams{1.9, 1.0}, MLParams{1.2, 2.7}, MLParams{1.99, 3.5}}) {
    for (int r = 1; r <= 10; ++r) {
      for (double t : {0.0, 0.7, 5.0, 17.0, 30.0}) {
        const double lhs = mlf_oracle(p, t, 1e-15).value;
        const double rhs = mlf_oracle_recursive(p, r, t, 1e-15).value;
        CAPTURE(p.alpha);
        CAPTURE(r);
        CAPTURE(t);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1 + std::abs(lhs)));
      }
    }
  }
}

TEST_CASE("scan grid layout") {
  const auto g = scan_grid(50.0);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 50.0);
  CHECK(g.size() == 1 + 640 + 640);
  const auto short_grid = scan_grid(1.03);
  CHECK(short_grid.back() == 1.03);
  CHECK(short_grid.size() == 1 + 65 + 1);
}

TEST_CASE("scan finds close root pairs between samples") {
  // roots at 2.001 and 2.005, closer than the dense spacing 1/64
  auto f = [](double t) { return (t - 2.001) * (t - 2.005); };
  const auto scan = scan_roots(f, 5.0);
  REQUIRE(scan.roots.size() == 2);
  CHECK(scan.roots[0] == doctest::Approx(2.001).epsilon(1e-9));
  CHECK(scan.roots[1] == doctest::Approx(2.005).epsilon(1e-9));

  auto tangent = [](double t) { return (t - 3.0) * (t - 3.0); };
  const auto tscan = scan_roots(tangent, 5.0);
  CHECK(tscan.roots.size() <= 2);
  CHECK((tscan.roots.size() == 0 ? !tscan.suspected_tangencies.empty() : true));

  ScanOptions no_probe;
  no_probe.probe_extrema = false;
  CHECK(count_sign_changes(f, 5.0, no_probe) == 0);
  CHECK(has_sign_change([](double t) { return 1.0 - t; }, 5.0));
}

TEST_CASE("real root counts") {
  const auto one = count_real_roots({1.2, 1.0}, 50.0, false);
  CHECK(one.roots.size() == 1);
  CHECK(count_real_roots({1.5, 2.5}, 50.0, false).roots.empty());
  const auto many = count_real_roots({1.9, 1.0}, 50.0, false);
  CHECK(many.roots.size() >= 2);
  for (double r : many.roots) {
    CHECK(std::abs(mlf_oracle({1.9, 1.0}, r, 1e-14).value) <= 1e-9);
  }
  CHECK(has_real_root({1.2, 1.0}, 50.0, false));
  CHECK_FALSE(has_real_root({1.5, 2.5}, 50.0, true));
}

TEST_CASE("every function root is followed by a derivative root") {
  for (const MLParams p : {MLParams{1.2, 1.0}, MLParams{1.5, 1.0}, MLParams{1.9, 1.0}, MLParams{1.8, 2.0}}) {
    const double t_max = 60.0;
    const auto f = count_real_roots(p, t_max, false);
    const auto d = count_real_roots(p, t_max + 20.0, true);
    for (double r : f.roots) {
      bool followed = false;
      for (double s : d.roots) followed = followed || s > r;
      CAPTURE(p.alpha);
      CAPTURE(r);
      CHECK(followed);
    }
  }
}
