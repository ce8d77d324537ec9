#pragma once

// Linear operators on truncated series and the multiplicativity instruments.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "adisc/series.hpp"
#include "adisc/spaces.hpp"

namespace adisc {

enum class SelfMapKind { SelfMap, UnimodularConstant, Neither };

struct SelfMapStatus {
  SelfMapKind kind = SelfMapKind::Neither;
  double boundary_max = 0.0;      // sampled max of |phi| on |z| = 1
  bool constant = false;
  bool boundary_contact = false;  // SelfMap with boundary_max in [1 - tol, 1 + tol]

  std::string describe() const;
};

// Maximum principle: a polynomial with max |phi| <= 1 on the circle maps the
// disc into the closed disc, and into the open disc unless it is a unimodular
// constant. Constants with |phi| < 1 - tol count as (constant) self-maps.
SelfMapStatus is_self_map(const Series& phi, double tol = 1e-9);

struct Composition {
  Series symbol;
};
struct Multiplication {
  Series multiplier;
};
struct BoundaryEval {
  Complex point;  // |c| = 1
};
struct PointEval {
  Complex point;  // |a| < 1
};
struct MatrixOperator {
  int dim = 0;                  // acts on coefficient vectors of length dim
  std::vector<Complex> entries;  // column-major, dim * dim

  Complex at(int row, int col) const {
    return entries[static_cast<std::size_t>(col) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(row)];
  }
};

class Operator {
public:
  using Variant = std::variant<Composition, Multiplication, BoundaryEval, PointEval, MatrixOperator>;

  // Each factory validates its invariant and throws Error on violation.
  static Operator composition(Series symbol);
  static Operator multiplication(Series multiplier);
  static Operator boundary_eval(Complex c);
  static Operator point_eval(Complex a);
  static Operator matrix(int dim, std::vector<Complex> column_major);

  const Variant& variant() const noexcept { return v_; }
  std::string describe() const;

private:
  explicit Operator(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

// The result has the degree of f; polynomial symbols and multipliers are padded to it.
Series apply(const Operator& op, const Series& f);

// apply(T, z) at the given truncation degree.
Series symbol_of(const Operator& op, int degree);

// Column k holds the coefficients of apply(T, z^k); k = 0..degree.
Operator matrix_of(const Operator& op, int degree);

struct MultiplicativityReport {
  double max_residual = 0.0;
  double mean_residual = 0.0;
  int trials = 0;
  SpaceSpec space;
  std::uint64_t seed = 0;
  int degree_budget = 0;
  int witness_trial = -1;
  Series witness_f;
  Series witness_g;
};

enum class Product { Pointwise, Duhamel };

struct ResidualOptions {
  int trials = 100;
  std::uint64_t seed = 0;
  int degree_budget = kDefaultDegree / 2;
  int working_degree = kDefaultDegree;
  Product product = Product::Pointwise;
  unsigned threads = 1;  // 0 = hardware concurrency
};

// Over seeded random pairs (f, g) of degree <= degree_budget:
//   || T(f g) - T(f) T(g) ||_space        (Pointwise)
//   || T(f * g) - T(f) * T(g) ||_space    (Duhamel product)
// Trial t uses seeds derived from (seed, t), so any thread count gives
// bit-identical reports.
MultiplicativityReport almost_mult_residual(const Operator& op, const SpaceSpec& space, const ResidualOptions& options);

enum class UnitPreservation { Holds, Violated, PreconditionFailed };

struct UnitCheck {
  UnitPreservation status = UnitPreservation::PreconditionFailed;
  double multiplicative_residual = 0.0;
  double unit_defect = 0.0;  // || T1 - 1 ||_sup
};

// T(1) = 1 for every nonzero almost multiplicative T. Checked only after T
// passes the pointwise residual test at `tol` in the sup norm.
UnitCheck unit_preservation_check(const Operator& op, double tol = 1e-11, int working_degree = kDefaultDegree);

// max over seeded probe functions f of |(T f)(x) - f(phi(x))| with phi = symbol_of(T).
// Requires |x| < 1. Probes have degree working_degree / deg(phi), so f(phi(x))
// is exact for any polynomial symbol; zero for composition operators.
double adjoint_eval_check(const Operator& op, Complex x, int probe_count, std::uint64_t seed = 0,
                          int working_degree = kDefaultDegree);

// Sampled lower bound max ||T f|| / ||f|| over z^0..z^N and `trials` seeded
// random f of degree N. Not the operator norm itself.
struct NormLowerBound {
  double value = 0.0;
  std::string witness;  // "z^3" or "random trial 7"
};
NormLowerBound operator_norm_lower_bound(const Operator& op, const SpaceSpec& space, int trials,
                                         std::uint64_t seed = 0, int working_degree = kDefaultDegree);

struct HardyDemoRow {
  int n = 0;
  double norm_h2 = 0.0;      // ||f_n||_{H^2}, quadrature
  double value_at_c = 0.0;   // |f_n(c)|
  double tail_sq = 0.0;      // ||f - f_n||^2_{H^2} = pi^2/6 - ||f_n||^2
};

// f_n = sum_{k<=n} (conj(c) z)^k / k, the partial sums of log(1/(1 - conj(c) z)).
std::vector<HardyDemoRow> divergence_demo_hardy(Complex c, int n_max);

struct BlochDemoRow {
  int n = 0;
  double norm_bloch = 0.0;
  double norm_error = 0.0;
  double value_at_c = 0.0;  // |p_n(c)|
};

// p_n = sum_{k<n} (conj(c) z)^(2k+1) / (2k+1).
Series bloch_test_polynomial(Complex c, int n);
std::vector<BlochDemoRow> divergence_demo_bloch(Complex c, int n_max, int stride = 1);

}  // namespace adisc
