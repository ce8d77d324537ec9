#include <doctest.h>

#include "adisc/error.hpp"
#include "adisc/quadrature.hpp"
#include "adisc/spaces.hpp"
#include "adisc/special.hpp"
#include "oracles.hpp"

using namespace adisc;

namespace {
bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }
}  // namespace

TEST_CASE("special functions") {
  CHECK(close(gamma_fn(5.0), 24.0, 1e-14));
  CHECK(close(gamma_fn(0.5), std::sqrt(M_PI), 1e-14));
  CHECK(close(log_gamma(200.0), std::lgamma(200.0), 1e-14));
  CHECK(close(beta(2.0, 3.0), 1.0 / 12.0, 1e-14));
  CHECK(std::abs(beta_asymptotic_ratio(1e6, 1.5) - 1.0) < 1e-5);
  CHECK_THROWS_AS(log_gamma(0.0), Error);
}

TEST_CASE("gauss-legendre integrates polynomials exactly") {
  const GaussLegendre& g = gauss_legendre(10);
  double s = 0.0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i] * std::pow(g.nodes[i], 18);
  CHECK(close(s, 2.0 / 19.0, 1e-14));
}

TEST_CASE("radial rule weights sum to one") {
  for (double alpha : {-0.5, 0.0, 1.0, 2.5, -0.9}) {
    const auto rule = radial_rule(alpha, 16, 32);
    double s = 0.0;
    for (double w : rule->weights) {
      CHECK(w > 0.0);
      s += w;
    }
    CHECK(close(s, 1.0, 1e-13));
  }
}

TEST_CASE("space spec parsing") {
  CHECK(SpaceSpec::parse("hardy:p=4") == SpaceSpec::hardy(4));
  CHECK(SpaceSpec::parse("bergman:p=2,a=1") == SpaceSpec::bergman(2, 1));
  CHECK(SpaceSpec::parse("bloch") == SpaceSpec::bloch());
  CHECK(SpaceSpec::parse("besov:p=3") == SpaceSpec::besov(3));
  CHECK(SpaceSpec::parse("sup") == SpaceSpec::sup());
  CHECK_THROWS_AS(SpaceSpec::parse("hardy:p=0.5"), Error);
  CHECK_THROWS_AS(SpaceSpec::parse("bergman:p=2,a=-1"), Error);
  CHECK_THROWS_AS(SpaceSpec::parse("dirichlet"), Error);
}

TEST_CASE("hardy norms") {
  const Series f = random_series(1, 30, 0.9, 1.0);
  CHECK(close(norm(f, SpaceSpec::hardy(2)).value, oracle::hardy2(f), 1e-13));
  CHECK(close(norm(Series::monomial(7, 64), SpaceSpec::hardy(4)).value, 1.0, 1e-14));
  // ||(1 + z/2)^2||_1 = ||1 + z/2||_2^2
  CHECK(close(norm(Series({1.0, 1.0, 0.25}), SpaceSpec::hardy(1)).value, 1.25, 1e-13));
}

TEST_CASE("bergman norms") {
  CHECK(close(norm(Series::identity(64), SpaceSpec::bergman(2, 0)).value, std::sqrt(0.5), 1e-12));
  const Series f = random_series(2, 20, 0.8, 1.0);
  for (double a : {-0.5, 0.0, 1.5}) CHECK(close(norm(f, SpaceSpec::bergman(2, a)).value, oracle::bergman2(f, a), 1e-10));
  for (int n : {0, 3, 17}) {
    for (double p : {1.0, 4.0}) {
      const SpaceSpec s = SpaceSpec::bergman(p, -0.5);
      CHECK(close(norm(Series::monomial(n, 32), s).value, monomial_norm_closed_form(s, n), 1e-10));
    }
  }
}

TEST_CASE("besov norms") {
  for (int n : {1, 2, 9}) {
    for (double p : {1.5, 2.0, 3.0}) {
      const SpaceSpec s = SpaceSpec::besov(p);
      CHECK(close(norm(Series::monomial(n, 32), s).value, monomial_norm_closed_form(s, n), 1e-9));
    }
  }
  CHECK(close(norm(Series::monomial(3, 32), SpaceSpec::besov(1)).value, 4.0, 1e-9));
}

TEST_CASE("bloch norms") {
  CHECK(close(norm(Series::monomial(2, 64), SpaceSpec::bloch()).value, 0.7698003589195010, 1e-14));
  CHECK(close(norm(Series::identity(8), SpaceSpec::bloch()).value, 1.0, 1e-15));
  const Series f = random_series(3, 12, 0.8, 1.0);
  const NormResult b = norm(f, SpaceSpec::bloch());
  const double grid = oracle::bloch_grid(f, 400, 400);
  CHECK(b.value >= grid - 1e-12);
  CHECK(b.value <= grid * 1.01);
  CHECK(b.error_estimate < 1e-10);
}

TEST_CASE("sup norm and circle max") {
  CHECK(close(norm(Series({1.0, Complex(0.0, 1.0)}), SpaceSpec::sup()).value, 2.0, 1e-15));
  CHECK(close(circle_max(Series({0.0, 0.0, 1.0}), 0.5), 0.25, 1e-15));
  const Series f = random_series(4, 10, 0.8, 1.0);
  CHECK(norm(f, SpaceSpec::sup()).value >= norm(f, SpaceSpec::hardy(2)).value);
}

TEST_CASE("hardy means grow with the radius") {
  const Series f = random_series(5, 16, 0.9, 1.0);
  double prev = 0.0;
  for (double r = 0.1; r <= 1.0; r += 0.1) {
    const double m = hardy_circle_mean(f, 3.0, r);
    CHECK(m >= prev);
    prev = m;
  }
}

TEST_CASE("norm axioms") {
  const Series f = random_series(6, 16, 0.8, 1.0);
  const Series g = random_series(7, 16, 0.8, 1.0);
  for (const SpaceSpec& s : {SpaceSpec::hardy(3), SpaceSpec::bergman(2, 1), SpaceSpec::besov(2), SpaceSpec::bloch()}) {
    const double nf = norm(f, s).value;
    CHECK(norm(f + g, s).value <= nf + norm(g, s).value + 1e-12);
    CHECK(close(norm(Complex(0.0, 2.0) * f, s).value, 2.0 * nf, 1e-10));
    CHECK(norm(Series::zero(16), s).value == 0.0);
  }
}

TEST_CASE("growth inequalities") {
  const Series f = random_series(8, 20, 0.8, 1.0);
  CHECK(bloch_growth_check(f, {0.9, 0.1}).holds);
  CHECK(besov_growth_check(f, 2.0, {0.5, 0.5}, 1.0).ratio > 0.0);
  CHECK(besov_multiplier_check(f, Series({0.0, 1.0, 0.5}), 2.0).holds);
  CHECK(std::isfinite(besov_mass(f, 2.0)));
  CHECK(little_bloch_defect(Series::monomial(4, 8), 0.9) < norm(Series::monomial(4, 8), SpaceSpec::bloch()).value);
}
