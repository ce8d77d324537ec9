#include <doctest.h>

#include "adisc/duhamel.hpp"
#include "adisc/error.hpp"
#include "adisc/special.hpp"
#include "oracles.hpp"

using namespace adisc;

TEST_CASE("monomial rule") {
  for (int m = 0; m <= 12; ++m) {
    for (int n = 0; n <= 12; ++n) {
      const Series p = duhamel(Series::monomial(m, 30), Series::monomial(n, 30));
      const double expect = std::exp(log_gamma(m + 1.0) + log_gamma(n + 1.0) - log_gamma(m + n + 1.0));
      CHECK(std::abs(p[m + n] - expect) <= 1e-13 * expect);
      CHECK(std::abs(p[m + n + 1]) == 0.0);
    }
  }
  CHECK(duhamel(Series::identity(4), Series::identity(4))[2].real() == doctest::Approx(0.5));
  CHECK(duhamel(Series::monomial(2, 4), Series::monomial(2, 4))[4].real() == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("agrees with the naive sum") {
  const Series f = random_series(1, 40, 0.9, 1.0);
  const Series g = random_series(2, 40, 0.9, 1.0);
  CHECK(oracle::max_diff(duhamel(f, g), oracle::duhamel_naive(f, g)) < 1e-13);
}

TEST_CASE("large degrees stay finite") {
  const Series f = Series::constant(1.0, 400) + Series::monomial(200, 400);
  const Series p = duhamel(f, f);
  for (const Complex& c : p.coeffs()) CHECK(std::isfinite(std::abs(c)));
  const double w = std::exp(2 * log_gamma(201.0) - log_gamma(401.0));
  CHECK(std::abs(p[400] - w) <= 1e-12 * w);
  CHECK(p[200] == Complex(2.0));
}

TEST_CASE("algebra laws") {
  const Series f = random_series(3, 30, 0.8, 1.0);
  const Series g = random_series(4, 30, 0.8, 1.0);
  const Series h = random_series(5, 30, 0.8, 1.0);
  const Series one = Series::constant(1.0, 30);
  CHECK(oracle::max_diff(duhamel(f, g), duhamel(g, f)) < 1e-14);
  CHECK(oracle::max_diff(duhamel(duhamel(f, g), h), duhamel(f, duhamel(g, h))) < 1e-13);
  CHECK(oracle::max_diff(duhamel(one, f), f) < 1e-15);
  CHECK(oracle::max_diff(duhamel(f, g + h), duhamel(f, g) + duhamel(f, h)) < 1e-14);
}

TEST_CASE("borel transform turns the duhamel product into the cauchy product") {
  const Series f = random_series(6, 25, 0.8, 1.0);
  const Series g = random_series(7, 25, 0.8, 1.0);
  const Series lhs = borel(duhamel(f, g));
  const Series rhs = borel(f) * borel(g);
  double scale = 0.0;
  for (const Complex& c : rhs.coeffs()) scale = std::max(scale, std::abs(c));
  CHECK(oracle::max_diff(lhs, rhs) < 1e-13 * scale);
  CHECK(oracle::max_diff(inverse_borel(borel(f)), f) < 1e-15);
}

TEST_CASE("quadrature oracle matches coefficients") {
  const Series f = random_series(8, 12, 0.6, 1.0);
  const Series g = random_series(9, 12, 0.6, 1.0);
  const Series p = duhamel(f.with_degree(24), g.with_degree(24));
  for (Complex z : {Complex{0.3, 0.1}, Complex{-0.5, 0.4}, Complex{0.0, 0.0}}) {
    const OracleResult o = duhamel_oracle(f, g, z);
    CHECK(std::abs(o.value - evaluate(p, z)) < 1e-12);
  }
  CHECK_THROWS_AS(duhamel_oracle(f, g, {1.0, 0.0}), Error);
}

TEST_CASE("composition residual separates a z from the rest") {
  const DuhamelResidual lin = duhamel_residual(Series({0.0, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0}), SpaceSpec::hardy(2), 4);
  CHECK(lin.verdict);
  CHECK(lin.max_residual < 1e-14);

  const DuhamelResidual sq = duhamel_residual(Series::monomial(2, 16), SpaceSpec::hardy(2), 4);
  CHECK_FALSE(sq.verdict);
  CHECK(sq.witness_i == 1);
  CHECK(sq.witness_j == 1);

  CHECK_THROWS_AS(duhamel_residual(Series::monomial(1, 8, 2.0), SpaceSpec::hardy(2), 4), Error);
}

TEST_CASE("classifier") {
  CHECK(classify_duhamel_multiplicative(Series({0.0, Complex(0.3, 0.4), 0.0, 0.0})).multiplicative);
  const DuhamelClassification c = classify_duhamel_multiplicative(Series({0.0, 0.5, 0.0, 0.1}));
  CHECK_FALSE(c.multiplicative);
  CHECK(c.witness_index == 3);
  CHECK_FALSE(classify_duhamel_multiplicative(Series({0.2, 0.5, 0.0})).multiplicative);
}
