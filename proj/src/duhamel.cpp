#include "adisc/duhamel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "adisc/error.hpp"
#include "adisc/operators.hpp"
#include "adisc/quadrature.hpp"
#include "adisc/special.hpp"

#ifdef ADISC_CROSS_VALIDATE
#include <stdexcept>
#endif

namespace adisc {
namespace {

std::vector<double> log_factorials(int n) {
  std::vector<double> lf(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) lf[static_cast<std::size_t>(k)] = k < 2 ? 0.0 : log_gamma(k + 1.0);
  return lf;
}

std::string monomial_name(int k) {
  if (k == 0) return "1";
  if (k == 1) return "z";
  return "z^" + std::to_string(k);
}

}  // namespace

Series duhamel(const Series& f, const Series& g) {
  const int n = std::min(f.degree(), g.degree());
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  std::vector<double> w(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    // w[i] = 1 / binom(k, i); the recurrence is exact while binom(k, i) fits the mantissa
    long double binom = 1.0L;
    for (int i = 0; 2 * i <= k; ++i) {
      if (i > 0) binom = binom * static_cast<long double>(k - i + 1) / static_cast<long double>(i);
      w[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(k - i)] = static_cast<double>(1.0L / binom);
    }
    Complex sum{};
    for (int i = 0; i <= k; ++i) sum += w[static_cast<std::size_t>(i)] * f[i] * g[k - i];
    c[static_cast<std::size_t>(k)] = sum;
  }
  return Series(std::move(c));
}

Series borel(const Series& f) {
  std::vector<Complex> c(f.coeffs().begin(), f.coeffs().end());
  const std::vector<double> lf = log_factorials(f.degree());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] *= std::exp(lf[k]);
  return Series(std::move(c));
}

Series inverse_borel(const Series& f) {
  std::vector<Complex> c(f.coeffs().begin(), f.coeffs().end());
  const std::vector<double> lf = log_factorials(f.degree());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] *= std::exp(-lf[k]);
  return Series(std::move(c));
}

OracleResult duhamel_oracle(const Series& f, const Series& g, Complex z) {
  if (!(std::abs(z) < 1.0)) fail(ErrorCode::Domain, "duhamel_oracle: requires |z| < 1");
  const Series df = derivative(f);
  // t = s z:  int_0^z f'(z - t) g(t) dt = z int_0^1 f'(z (1 - s)) g(z s) ds
  auto integrate = [&](int n, double& magnitude) {
    const GaussLegendre& gl = gauss_legendre(n);
    Complex sum{};
    magnitude = 0.0;
    for (int i = 0; i < n; ++i) {
      const double s = 0.5 * (gl.nodes[static_cast<std::size_t>(i)] + 1.0);
      const double w = 0.5 * gl.weights[static_cast<std::size_t>(i)];
      const Complex term = w * horner(df.coeffs(), z * (1.0 - s)) * horner(g.coeffs(), z * s);
      sum += term;
      magnitude += std::abs(term);
    }
    return z * sum;
  };
  double mag = 0.0;
  int n = 8;
  Complex prev = integrate(n, mag);
  for (n = 16; n <= 1024; n *= 2) {
    double mag_n = 0.0;
    const Complex cur = integrate(n, mag_n);
    if (std::abs(cur - prev) <= 1e-14 * std::abs(z) * mag_n) {
      return {cur + f[0] * horner(g.coeffs(), z), n};
    }
    prev = cur;
  }
  fail(ErrorCode::Quadrature, "duhamel_oracle: no convergence with 1024 Gauss-Legendre nodes");
}

DuhamelResidual duhamel_residual(const Series& phi, const SpaceSpec& space, int basis_degree, double tolerance) {
  space.validate();
  const SelfMapStatus status = is_self_map(phi);
  if (status.kind != SelfMapKind::SelfMap) {
    fail(ErrorCode::NotSelfMap, "duhamel_residual: symbol is not a self-map of the disc (" + status.describe() + ")");
  }
  const int n = phi.degree();
  if (basis_degree < 0 || 2 * basis_degree > n) {
    fail(ErrorCode::InvalidArgument, "duhamel_residual: basis degree " + std::to_string(basis_degree) +
                                         " needs truncation degree >= " + std::to_string(2 * basis_degree));
  }
  // C_phi z^k = phi^k for k <= 2 * basis_degree.
  std::vector<Series> powers;
  powers.reserve(static_cast<std::size_t>(2 * basis_degree) + 1);
  powers.push_back(Series::constant(1.0, n));
  for (int k = 1; k <= 2 * basis_degree; ++k) powers.push_back(cauchy_mul(powers.back(), phi));

  const std::vector<double> lf = log_factorials(2 * basis_degree);
  DuhamelResidual out;
  out.tolerance = tolerance;
  out.basis_degree = basis_degree;
  out.space = space;
  for (int i = 0; i <= basis_degree; ++i) {
    for (int j = i; j <= basis_degree; ++j) {
      const double w = std::exp(lf[static_cast<std::size_t>(i)] + lf[static_cast<std::size_t>(j)] -
                                lf[static_cast<std::size_t>(i + j)]);
      const Series lhs = scale(powers[static_cast<std::size_t>(i + j)], w);
      const Series rhs = duhamel(powers[static_cast<std::size_t>(i)], powers[static_cast<std::size_t>(j)]);
      const double r = norm(sub(lhs, rhs), space).value;
      if (r > out.max_residual) {
        out.max_residual = r;
        out.witness_i = i;
        out.witness_j = j;
      }
    }
  }
  out.verdict = out.max_residual < tolerance;
  return out;
}

DuhamelClassification classify_duhamel_multiplicative(const Series& phi, double tol) {
  const double threshold = tol * std::max(1.0, phi.max_abs_coeff());
  DuhamelClassification out;
  out.multiplicative = true;
  for (int k = 0; k <= phi.degree(); ++k) {
    if (k == 1) continue;
    const double m = std::abs(phi[k]);
    if (m >= threshold && m > out.witness_magnitude) {
      out.multiplicative = false;
      out.witness_index = k;
      out.witness_magnitude = m;
    }
  }
  std::ostringstream msg;
  msg.precision(6);
  if (out.multiplicative) {
    msg << "phi(z) = a z with a = " << phi[1].real() << (phi[1].imag() < 0 ? "-" : "+") << std::abs(phi[1].imag())
        << "i: composition commutes with the Duhamel product";
  } else if (out.witness_index == 0) {
    msg << "phi(0) = " << std::abs(phi[0]) << " (modulus) is nonzero; at z = 0 the pair (z, z) would force "
        << "phi(0)^2/2 = phi(0)^2";
  } else {
    msg << "coefficient of " << monomial_name(out.witness_index) << " has modulus " << out.witness_magnitude
        << "; only phi(z) = a z is Duhamel multiplicative";
  }
  out.explanation = msg.str();

#ifdef ADISC_CROSS_VALIDATE
  if (is_self_map(phi).kind == SelfMapKind::SelfMap && phi.degree() >= 4) {
    const DuhamelResidual r = duhamel_residual(phi, SpaceSpec::hardy(2.0), 2, tol);
    if (out.multiplicative && r.max_residual > 1e-6) {
      throw std::logic_error("classifier/residual disagreement: classified multiplicative, residual " +
                             std::to_string(r.max_residual));
    }
    if (!out.multiplicative && out.witness_magnitude >= 1e-3 && r.max_residual <= 1e-12) {
      throw std::logic_error("classifier/residual disagreement: classified non-multiplicative, residual " +
                             std::to_string(r.max_residual));
    }
  }
#endif
  return out;
}

}  // namespace adisc
