#include <doctest.h>

#include "adisc/error.hpp"
#include "adisc/operators.hpp"
#include "oracles.hpp"

using namespace adisc;

TEST_CASE("self-map classification") {
  CHECK(is_self_map(Series({0.0, 0.5, 0.0})).kind == SelfMapKind::SelfMap);
  CHECK(is_self_map(Series({0.0, 1.0, 0.0})).boundary_contact);
  CHECK(is_self_map(Series({0.0, 0.7, 0.5})).kind == SelfMapKind::Neither);
  CHECK(is_self_map(Series::constant(Complex(0.6, 0.8), 4)).kind == SelfMapKind::UnimodularConstant);
  CHECK(is_self_map(Series::constant(0.3, 4)).kind == SelfMapKind::SelfMap);
}

TEST_CASE("factories validate") {
  CHECK_THROWS_AS(Operator::composition(Series({0.0, 2.0})), Error);
  CHECK_THROWS_AS(Operator::boundary_eval({0.5, 0.0}), Error);
  CHECK_THROWS_AS(Operator::point_eval({1.0, 0.0}), Error);
  CHECK_THROWS_AS(Operator::matrix(2, {1.0, 0.0, 0.0}), Error);
  CHECK_NOTHROW(Operator::point_eval({0.0, 0.5}));
}

TEST_CASE("apply each variant") {
  const Series f = random_series(1, 16, 0.8, 1.0);
  const Series phi({0.0, 0.5, 0.0});
  CHECK(oracle::max_diff(apply(Operator::composition(phi), f), compose(f, phi.with_degree(16))) < 1e-15);
  const Series h({1.0, 1.0});
  CHECK(oracle::max_diff(apply(Operator::multiplication(h), f.with_degree(1)), h * f.with_degree(1)) == 0.0);
  const Series b = apply(Operator::boundary_eval({0.0, 1.0}), f);
  CHECK(b.effective_degree() == 0);
  CHECK(std::abs(b[0] - horner(f.coeffs(), {0.0, 1.0})) < 1e-14);
  const Series p = apply(Operator::point_eval({0.25, 0.0}), f);
  CHECK(std::abs(p[0] - evaluate(f, 0.25)) < 1e-15);
}

TEST_CASE("matrix form reproduces the operator") {
  const Operator c = Operator::composition(Series({0.0, 0.4, 0.3}));
  const Operator m = matrix_of(c, 12);
  const Series f = random_series(2, 12, 0.8, 1.0);
  CHECK(oracle::max_diff(apply(m, f), apply(c, f)) < 1e-14);
  CHECK_THROWS_AS(apply(m, random_series(3, 10, 0.8, 1.0)), Error);
}

TEST_CASE("pointwise residuals") {
  ResidualOptions o;
  o.trials = 20;
  CHECK(almost_mult_residual(Operator::composition(Series({0.0, 0.0, 1.0})), SpaceSpec::hardy(2), o).max_residual < 1e-11);
  CHECK(almost_mult_residual(Operator::point_eval({0.3, 0.2}), SpaceSpec::sup(), o).max_residual < 1e-11);
  const MultiplicativityReport r = almost_mult_residual(Operator::multiplication(Series({2.0, 0.0})), SpaceSpec::hardy(2), o);
  CHECK(r.max_residual > 1e-3);
  CHECK(r.witness_trial >= 0);
}

TEST_CASE("duhamel residual of composition") {
  ResidualOptions o;
  o.trials = 10;
  o.product = Product::Duhamel;
  CHECK(almost_mult_residual(Operator::composition(Series({0.0, 0.6})), SpaceSpec::hardy(2), o).max_residual < 1e-12);
  CHECK(almost_mult_residual(Operator::composition(Series({0.0, 0.0, 0.6})), SpaceSpec::hardy(2), o).max_residual > 1e-3);
}

TEST_CASE("residuals do not depend on the thread count") {
  ResidualOptions o;
  o.trials = 16;
  o.seed = 99;
  const Operator op = Operator::multiplication(Series({1.0, 0.5}));
  const auto one = almost_mult_residual(op, SpaceSpec::hardy(2), o);
  o.threads = 4;
  const auto four = almost_mult_residual(op, SpaceSpec::hardy(2), o);
  CHECK(one.max_residual == four.max_residual);
  CHECK(one.mean_residual == four.mean_residual);
  CHECK(one.witness_trial == four.witness_trial);
}

TEST_CASE("unit preservation") {
  CHECK(unit_preservation_check(Operator::point_eval({0.5, 0.0})).status == UnitPreservation::Holds);
  CHECK(unit_preservation_check(Operator::composition(Series({0.0, 0.0, 0.5}))).status == UnitPreservation::Holds);
  CHECK(unit_preservation_check(Operator::multiplication(Series({2.0}))).status == UnitPreservation::PreconditionFailed);
  std::vector<Complex> zero(9, 0.0);
  CHECK(unit_preservation_check(Operator::matrix(3, zero), 1e-11, 2).status == UnitPreservation::PreconditionFailed);
}

TEST_CASE("adjoint evaluation") {
  const Operator c = Operator::composition(Series({0.1, 0.5, 0.2}));
  CHECK(adjoint_eval_check(c, {0.3, 0.1}, 10) < 1e-12);
  CHECK_THROWS_AS(adjoint_eval_check(c, {1.0, 0.0}, 10), Error);
}

TEST_CASE("divergence demos") {
  const auto h = divergence_demo_hardy({0.0, 1.0}, 50);
  CHECK(h.size() == 50);
  CHECK(h.back().tail_sq > 0.0);
  CHECK(h.back().value_at_c > h.front().value_at_c);
  const auto b = divergence_demo_bloch({1.0, 0.0}, 40, 13);
  for (const auto& row : b) CHECK(row.norm_bloch <= 1.0 + 1e-9);
  CHECK_THROWS_AS(divergence_demo_bloch({0.5, 0.0}, 4), Error);
}

TEST_CASE("operator norm lower bounds") {
  const NormLowerBound id = operator_norm_lower_bound(Operator::composition(Series::identity(16)), SpaceSpec::hardy(2), 5);
  CHECK(std::abs(id.value - 1.0) < 1e-12);
  // multiplication by 2 + z on H^2: ||(2 + z) z^k|| / ||z^k|| = sqrt(5)
  const NormLowerBound m = operator_norm_lower_bound(Operator::multiplication(Series({2.0, 1.0})), SpaceSpec::hardy(2), 0, 0, 8);
  CHECK(std::abs(m.value - std::sqrt(5.0)) < 1e-12);
  CHECK(m.witness == "1");
  // point evaluation at a: the constant 1 already gives 1, and ||T|| = 1 / sqrt(1 - |a|^2) on H^2
  const NormLowerBound pe = operator_norm_lower_bound(Operator::point_eval({0.5, 0.0}), SpaceSpec::hardy(2), 50, 3, 32);
  CHECK(pe.value >= 1.0);
  CHECK(pe.value <= 1.0 / std::sqrt(0.75) + 1e-12);
}
