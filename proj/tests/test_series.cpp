#include <doctest.h>

#include "adisc/error.hpp"
#include "adisc/series.hpp"
#include "oracles.hpp"

using namespace adisc;

TEST_CASE("binary operations truncate to the smaller degree") {
  const Series f = random_series(1, 10, 0.8, 1.0);
  const Series g = random_series(2, 6, 0.8, 1.0);
  CHECK((f + g).degree() == 6);
  CHECK((f * g).degree() == 6);
  CHECK((f - f) == Series::zero(10));
}

TEST_CASE("cauchy product of monomials") {
  const Series p = Series::monomial(3, 10) * Series::monomial(4, 10, 2.0);
  for (int k = 0; k <= 10; ++k) CHECK(p[k] == (k == 7 ? Complex(2.0) : Complex{}));
  // beyond the truncation degree nothing survives
  CHECK(Series::monomial(6, 10) * Series::monomial(6, 10) == Series::zero(10));
}

TEST_CASE("ring axioms on random series") {
  const Series f = random_series(11, 24, 0.9, 1.0);
  const Series g = random_series(12, 24, 0.9, 1.0);
  const Series h = random_series(13, 24, 0.9, 1.0);
  CHECK(oracle::max_diff(f * g, g * f) < 1e-14);
  CHECK(oracle::max_diff((f * g) * h, f * (g * h)) < 1e-13);
  CHECK(oracle::max_diff(f * (g + h), f * g + f * h) < 1e-13);
}

TEST_CASE("derivative and antiderivative") {
  const Series f = random_series(5, 12, 0.7, 1.0);
  CHECK(antiderivative(f).degree() == 13);
  CHECK(antiderivative(f)[0] == Complex{});
  CHECK(oracle::max_diff(derivative(antiderivative(f)), f) < 1e-15);
  CHECK(derivative(Series::constant(3.0, 0)).degree() == 0);
}

TEST_CASE("evaluate rejects points outside the closed disc") {
  const Series f = Series::identity(4);
  CHECK(evaluate(f, {0.0, 1.0}) == Complex(0.0, 1.0));
  CHECK_THROWS_AS(evaluate(f, {1.1, 0.0}), Error);
  CHECK(std::abs(horner(f.coeffs(), {2.0, 0.0}) - 2.0) == 0.0);
}

TEST_CASE("compose with phi(0) = 0 is exact") {
  // (1 + z)^2 at phi = z/2 + z^2/4
  const Series f({1.0, 2.0, 1.0, 0.0, 0.0});
  const Series phi({0.0, 0.5, 0.25, 0.0, 0.0});
  const ComposeResult r = compose_detailed(f, phi);
  CHECK(r.path == ComposePath::Triangular);
  const Series expect = Series::constant(1.0, 4) + 2.0 * phi + phi * phi;
  CHECK(oracle::max_diff(r.series, expect) < 1e-15);
}

TEST_CASE("compose with phi(0) != 0 resamples") {
  const Series f = random_series(3, 16, 0.6, 1.0);
  const Series phi({0.3, 0.4, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0});
  const ComposeResult r = compose_detailed(f, phi);
  CHECK(r.path == ComposePath::Resampling);
  for (double x : {0.0, 0.3, -0.5}) {
    const Complex z{x, 0.2};
    CHECK(std::abs(evaluate(r.series, z) - evaluate(f, evaluate(phi, z))) < 1e-12);
  }
}

TEST_CASE("composition is associative") {
  const Series f = random_series(21, 20, 0.8, 1.0);
  const Series a({0.0, 0.5, 0.2, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0});
  const Series b({0.0, 0.3, 0.0, -0.3, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0});
  CHECK(oracle::max_diff(compose(compose(f, a), b), compose(f, compose(a, b))) < 1e-14);
}

TEST_CASE("deflation undoes multiplication by z - w") {
  const Series f = random_series(7, 15, 0.8, 1.0);
  const Complex w{0.3, -0.4};
  const Series g = deflate_at(f, w);
  const Series zw({-w, 1.0});
  const Series back = (zw.with_degree(15) * g.with_degree(15)) + Series::constant(evaluate(f, w), 15);
  CHECK(oracle::max_diff(back, f) < 1e-13);
  CHECK_THROWS_AS(deflate_at(f, {1.0, 0.0}), Error);
}

TEST_CASE("exp and log are inverse") {
  const Series f = 0.5 * random_series(8, 30, 0.7, 1.0);
  CHECK(oracle::max_diff(log_series(exp_series(f)), f) < 1e-12);
  const Series g = Series::constant(1.0, 30) + 0.3 * random_series(9, 30, 0.5, 1.0);
  CHECK(oracle::max_diff(exp_series(log_series(g)), g) < 1e-12);
  CHECK_THROWS_AS(log_series(Series::identity(5)), Error);
}

TEST_CASE("pow_series squares back") {
  const Series g = Series::constant(1.0, 20) + 0.2 * random_series(4, 20, 0.5, 1.0);
  const Series h = pow_series(g, 0.5);
  CHECK(oracle::max_diff(h * h, g) < 1e-13);
}

TEST_CASE("circle sampling round trip") {
  const Series f = random_series(31, 40, 0.9, 1.0);
  for (double r : {1.0, 0.9}) {
    const auto v = sample_circle(f, r, 64);
    CHECK(oracle::max_diff(coeffs_from_samples(v, r).with_degree(40), f) < 1e-12);
  }
  CHECK_THROWS_AS(sample_circle(f, 1.0, 16), Error);
}

TEST_CASE("random series are seeded") {
  CHECK(random_series(42, 10, 0.5, 1.0) == random_series(42, 10, 0.5, 1.0));
  CHECK_FALSE(random_series(42, 10, 0.5, 1.0) == random_series(43, 10, 0.5, 1.0));
  CHECK(derive_seed(1, 2) != derive_seed(2, 1));
}
