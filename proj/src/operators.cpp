#include "adisc/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "adisc/duhamel.hpp"
#include "adisc/error.hpp"
#include "parallel.hpp"

namespace adisc {
namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

std::string format_complex(Complex c) {
  std::ostringstream os;
  os.precision(6);
  os << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
  return os.str();
}

Series product(Product kind, const Series& f, const Series& g) {
  return kind == Product::Pointwise ? cauchy_mul(f, g) : duhamel(f, g);
}

}  // namespace

std::string SelfMapStatus::describe() const {
  std::ostringstream os;
  os.precision(6);
  switch (kind) {
    case SelfMapKind::SelfMap:
      os << (constant ? "constant self-map" : "self-map");
      if (boundary_contact) os << " with boundary contact";
      break;
    case SelfMapKind::UnimodularConstant: os << "unimodular constant"; break;
    case SelfMapKind::Neither: os << "neither self-map nor unimodular constant"; break;
  }
  os << ", max |phi| on |z|=1 is " << boundary_max;
  return os.str();
}

SelfMapStatus is_self_map(const Series& phi, double tol) {
  SelfMapStatus st;
  st.constant = true;
  for (int k = 1; k <= phi.degree(); ++k) {
    if (std::abs(phi[k]) > tol) {
      st.constant = false;
      break;
    }
  }
  if (st.constant) {
    st.boundary_max = std::abs(phi[0]);
    if (std::abs(st.boundary_max - 1.0) <= tol) {
      st.kind = SelfMapKind::UnimodularConstant;
    } else {
      st.kind = st.boundary_max < 1.0 ? SelfMapKind::SelfMap : SelfMapKind::Neither;
    }
    return st;
  }
  st.boundary_max = circle_max(phi, 1.0);
  if (st.boundary_max <= 1.0 + tol) {
    st.kind = SelfMapKind::SelfMap;
    st.boundary_contact = st.boundary_max >= 1.0 - tol;
  }
  return st;
}

// ================================================================ Operator

Operator Operator::composition(Series symbol) {
  const SelfMapStatus st = is_self_map(symbol);
  if (st.kind != SelfMapKind::SelfMap) {
    fail(ErrorCode::NotSelfMap, "composition operator: symbol is not a self-map (" + st.describe() + ")");
  }
  return Operator(Composition{std::move(symbol)});
}

Operator Operator::multiplication(Series multiplier) { return Operator(Multiplication{std::move(multiplier)}); }

Operator Operator::boundary_eval(Complex c) {
  if (!finite(c) || std::abs(std::abs(c) - 1.0) >= 1e-12) {
    fail(ErrorCode::Domain, "boundary evaluation: point must be unimodular, |c| = " + std::to_string(std::abs(c)));
  }
  return Operator(BoundaryEval{c});
}

Operator Operator::point_eval(Complex a) {
  if (!finite(a) || !(std::abs(a) < 1.0)) {
    fail(ErrorCode::Domain, "point evaluation: point must lie in the open disc, |a| = " + std::to_string(std::abs(a)));
  }
  return Operator(PointEval{a});
}

Operator Operator::matrix(int dim, std::vector<Complex> column_major) {
  if (dim < 1) fail(ErrorCode::InvalidArgument, "matrix operator: dimension must be positive");
  if (column_major.size() != static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {
    fail(ErrorCode::InvalidArgument, "matrix operator: expected " + std::to_string(dim * dim) + " entries, got " +
                                         std::to_string(column_major.size()));
  }
  for (const Complex& c : column_major) {
    if (!finite(c)) fail(ErrorCode::InvalidArgument, "matrix operator: non-finite entry");
  }
  return Operator(MatrixOperator{dim, std::move(column_major)});
}

std::string Operator::describe() const {
  struct Visitor {
    std::string operator()(const Composition& c) const {
      return "composition C_phi, phi of degree " + std::to_string(c.symbol.effective_degree());
    }
    std::string operator()(const Multiplication& m) const {
      return "multiplication M_h, h of degree " + std::to_string(m.multiplier.effective_degree());
    }
    std::string operator()(const BoundaryEval& b) const { return "boundary evaluation f -> f(" + format_complex(b.point) + ")"; }
    std::string operator()(const PointEval& p) const { return "point evaluation f -> f(" + format_complex(p.point) + ")"; }
    std::string operator()(const MatrixOperator& m) const {
      return "matrix operator of size " + std::to_string(m.dim) + "x" + std::to_string(m.dim);
    }
  };
  return std::visit(Visitor{}, v_);
}

Series apply(const Operator& op, const Series& f) {
  struct Visitor {
    const Series& f;
    // symbols and multipliers are polynomials: pad them so the result keeps deg f
    Series lift(const Series& s) const { return s.degree() >= f.degree() ? s : s.with_degree(f.degree()); }
    Series operator()(const Composition& c) const { return compose(f, lift(c.symbol)); }
    Series operator()(const Multiplication& m) const { return cauchy_mul(lift(m.multiplier), f); }
    Series operator()(const BoundaryEval& b) const { return Series::constant(horner(f.coeffs(), b.point), f.degree()); }
    Series operator()(const PointEval& p) const { return Series::constant(evaluate(f, p.point), f.degree()); }
    Series operator()(const MatrixOperator& m) const {
      if (f.degree() + 1 != m.dim) {
        fail(ErrorCode::InvalidArgument, "matrix operator of size " + std::to_string(m.dim) +
                                             " applied to a series of degree " + std::to_string(f.degree()));
      }
      std::vector<Complex> out(static_cast<std::size_t>(m.dim));
      for (int col = 0; col < m.dim; ++col) {
        const Complex x = f[col];
        if (x == Complex{}) continue;
        for (int row = 0; row < m.dim; ++row) out[static_cast<std::size_t>(row)] += m.at(row, col) * x;
      }
      return Series(std::move(out));
    }
  };
  return std::visit(Visitor{f}, op.variant());
}

Series symbol_of(const Operator& op, int degree) { return apply(op, Series::identity(std::max(degree, 1))); }

Operator matrix_of(const Operator& op, int degree) {
  const int dim = degree + 1;
  std::vector<Complex> entries(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
  for (int k = 0; k <= degree; ++k) {
    const Series col = apply(op, Series::monomial(k, degree)).with_degree(degree);
    std::copy(col.coeffs().begin(), col.coeffs().end(), entries.begin() + static_cast<std::ptrdiff_t>(k) * dim);
  }
  return Operator::matrix(dim, std::move(entries));
}

// ======================================================== residual testers

MultiplicativityReport almost_mult_residual(const Operator& op, const SpaceSpec& space, const ResidualOptions& options) {
  space.validate();
  const int n = options.working_degree;
  if (options.trials < 1) fail(ErrorCode::InvalidArgument, "almost_mult_residual: need at least one trial");
  if (options.degree_budget < 0 || 2 * options.degree_budget > n) {
    fail(ErrorCode::InvalidArgument, "almost_mult_residual: degree budget " + std::to_string(options.degree_budget) +
                                         " exceeds half the working degree " + std::to_string(n));
  }
  auto pair_for = [&](int trial) {
    const auto t = static_cast<std::uint64_t>(trial);
    Series f = random_series(derive_seed(options.seed, 2 * t), options.degree_budget, 0.7, 1.0).with_degree(n);
    Series g = random_series(derive_seed(options.seed, 2 * t + 1), options.degree_budget, 0.7, 1.0).with_degree(n);
    return std::make_pair(std::move(f), std::move(g));
  };
  std::vector<double> residuals(static_cast<std::size_t>(options.trials));
  detail::parallel_for(options.trials, options.threads, [&](int trial) {
    const auto [f, g] = pair_for(trial);
    const Series lhs = apply(op, product(options.product, f, g));
    const Series rhs = product(options.product, apply(op, f), apply(op, g));
    residuals[static_cast<std::size_t>(trial)] = norm(sub(lhs, rhs), space).value;
  });

  MultiplicativityReport rep;
  rep.trials = options.trials;
  rep.space = space;
  rep.seed = options.seed;
  rep.degree_budget = options.degree_budget;
  double sum = 0.0;
  for (int t = 0; t < options.trials; ++t) {
    const double r = residuals[static_cast<std::size_t>(t)];
    sum += r;
    if (rep.witness_trial < 0 || r > rep.max_residual) {
      rep.max_residual = r;
      rep.witness_trial = t;
    }
  }
  rep.mean_residual = sum / options.trials;
  auto [f, g] = pair_for(rep.witness_trial);
  rep.witness_f = std::move(f);
  rep.witness_g = std::move(g);
  return rep;
}

UnitCheck unit_preservation_check(const Operator& op, double tol, int working_degree) {
  UnitCheck out;
  const Series one = Series::constant(1.0, working_degree);
  const Series t1 = apply(op, one);
  const Series tz = apply(op, Series::identity(working_degree));
  if (t1.max_abs_coeff() == 0.0 && tz.max_abs_coeff() == 0.0) return out;  // zero operator

  ResidualOptions opts;
  opts.trials = 20;
  opts.working_degree = working_degree;
  opts.degree_budget = working_degree / 2;
  const MultiplicativityReport rep = almost_mult_residual(op, SpaceSpec::sup(), opts);
  out.multiplicative_residual = rep.max_residual;
  if (rep.max_residual >= tol) return out;

  out.unit_defect = norm(sub(t1, one), SpaceSpec::sup()).value;
  out.status = out.unit_defect < tol ? UnitPreservation::Holds : UnitPreservation::Violated;
  return out;
}

double adjoint_eval_check(const Operator& op, Complex x, int probe_count, std::uint64_t seed, int working_degree) {
  if (!(std::abs(x) < 1.0)) fail(ErrorCode::Domain, "adjoint_eval_check: requires |x| < 1");
  if (probe_count < 1) fail(ErrorCode::InvalidArgument, "adjoint_eval_check: need at least one probe");
  const Series phi = symbol_of(op, working_degree);
  const Complex y = horner(phi.coeffs(), x);
  // Probe degree chosen so that f o phi is a polynomial within the working degree.
  const int probe_degree = std::max(1, working_degree / std::max(1, phi.effective_degree()));
  double worst = 0.0;
  for (int i = 0; i < probe_count; ++i) {
    const Series f =
        random_series(derive_seed(seed, static_cast<std::uint64_t>(i)), probe_degree, 0.8, 1.0).with_degree(working_degree);
    const Complex lhs = horner(apply(op, f).coeffs(), x);
    const Complex rhs = horner(f.coeffs(), y);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

// ============================================================ divergence demos

NormLowerBound operator_norm_lower_bound(const Operator& op, const SpaceSpec& space, int trials, std::uint64_t seed,
                                         int working_degree) {
  if (trials < 0) fail(ErrorCode::InvalidArgument, "operator_norm_lower_bound: trials must be nonnegative");
  int n = working_degree;
  if (const auto* m = std::get_if<MatrixOperator>(&op.variant())) n = m->dim - 1;
  if (n < 0) fail(ErrorCode::InvalidArgument, "operator_norm_lower_bound: negative working degree");
  NormLowerBound out;
  auto probe = [&](const Series& f, const std::string& name) {
    const double nf = norm(f, space).value;
    if (!(nf > 0.0)) return;
    const double ratio = norm(apply(op, f), space).value / nf;
    if (ratio > out.value) {
      out.value = ratio;
      out.witness = name;
    }
  };
  for (int k = 0; k <= n; ++k) probe(Series::monomial(k, n), k == 0 ? "1" : k == 1 ? "z" : "z^" + std::to_string(k));
  for (int t = 0; t < trials; ++t) {
    probe(random_series(derive_seed(seed, 0x6f706e6f726dULL + static_cast<std::uint64_t>(t)), n, 0.9, 1.0),
          "random trial " + std::to_string(t));
  }
  return out;
}

std::vector<HardyDemoRow> divergence_demo_hardy(Complex c, int n_max) {
  if (!finite(c) || std::abs(std::abs(c) - 1.0) >= 1e-12) fail(ErrorCode::Domain, "divergence_demo_hardy: |c| must be 1");
  if (n_max < 1) fail(ErrorCode::InvalidArgument, "divergence_demo_hardy: n_max must be positive");
  std::vector<HardyDemoRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  const Complex cbar = std::conj(c);
  std::vector<Complex> coeffs(1, Complex{});
  Complex power = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    power *= cbar;
    coeffs.push_back(power / static_cast<double>(n));
    const Series fn(coeffs);
    HardyDemoRow row;
    row.n = n;
    row.norm_h2 = norm(fn, SpaceSpec::hardy(2.0)).value;
    row.value_at_c = std::abs(horner(fn.coeffs(), c));
    row.tail_sq = std::numbers::pi * std::numbers::pi / 6.0 - row.norm_h2 * row.norm_h2;
    rows.push_back(row);
  }
  return rows;
}

Series bloch_test_polynomial(Complex c, int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "bloch_test_polynomial: n must be positive");
  std::vector<Complex> coeffs(static_cast<std::size_t>(2 * n));
  const Complex cbar = std::conj(c);
  for (int k = 0; k < n; ++k) {
    const int m = 2 * k + 1;
    coeffs[static_cast<std::size_t>(m)] = std::pow(cbar, m) / static_cast<double>(m);
  }
  return Series(std::move(coeffs));
}

std::vector<BlochDemoRow> divergence_demo_bloch(Complex c, int n_max, int stride) {
  if (!finite(c) || std::abs(std::abs(c) - 1.0) >= 1e-12) fail(ErrorCode::Domain, "divergence_demo_bloch: |c| must be 1");
  if (n_max < 1 || stride < 1) fail(ErrorCode::InvalidArgument, "divergence_demo_bloch: n_max and stride must be positive");
  std::vector<BlochDemoRow> rows;
  for (int n = 1; n <= n_max; n += stride) {
    const Series pn = bloch_test_polynomial(c, n);
    const NormResult b = norm(pn, SpaceSpec::bloch());
    rows.push_back({n, b.value, b.error_estimate, std::abs(horner(pn.coeffs(), c))});
  }
  return rows;
}

}  // namespace adisc
