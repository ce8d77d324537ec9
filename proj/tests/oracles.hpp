#pragma once

// Slow reference implementations used only by the tests.

#include <cmath>
#include <complex>
#include <vector>

#include "adisc/series.hpp"

namespace oracle {

using adisc::Complex;
using adisc::Series;

// c_k = sum_{i+j=k} i! j! / k! a_i b_j with the binomial written out as a product.
inline Series duhamel_naive(const Series& f, const Series& g) {
  const int n = std::min(f.degree(), g.degree());
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i <= k; ++i) {
      long double w = 1.0L;  // 1 / binom(k, i)
      for (int t = 1; t <= i; ++t) w *= static_cast<long double>(t) / static_cast<long double>(k - i + t);
      c[static_cast<std::size_t>(k)] += static_cast<double>(w) * f[i] * g[k - i];
    }
  }
  return Series(std::move(c));
}

inline double hardy2(const Series& f) {
  double s = 0.0;
  for (const Complex& a : f.coeffs()) s += std::norm(a);
  return std::sqrt(s);
}

// ||z^k||^2 in A^2_alpha is Gamma(k+1) Gamma(alpha+2) / Gamma(k+alpha+2).
inline double bergman2(const Series& f, double alpha) {
  double s = 0.0;
  for (int k = 0; k <= f.degree(); ++k) {
    const double w = std::exp(std::lgamma(k + 1.0) + std::lgamma(alpha + 2.0) - std::lgamma(k + alpha + 2.0));
    s += w * std::norm(f[k]);
  }
  return std::sqrt(s);
}

// Dense polar grid for sup (1-|z|^2)|f'(z)|, no refinement.
inline double bloch_grid(const Series& f, int nr, int nt) {
  const Series d = adisc::derivative(f);
  double best = 0.0;
  for (int i = 0; i < nr; ++i) {
    const double r = static_cast<double>(i) / nr;
    for (int j = 0; j < nt; ++j) {
      const Complex z = std::polar(r, 2.0 * M_PI * j / nt);
      best = std::max(best, (1.0 - r * r) * std::abs(adisc::horner(d.coeffs(), z)));
    }
  }
  return std::abs(f[0]) + best;
}

inline double max_diff(const Series& f, const Series& g) {
  double m = 0.0;
  const int n = std::max(f.degree(), g.degree());
  for (int k = 0; k <= n; ++k) {
    const Complex a = k <= f.degree() ? f[k] : Complex{};
    const Complex b = k <= g.degree() ? g[k] : Complex{};
    m = std::max(m, std::abs(a - b));
  }
  return m;
}

}  // namespace oracle
