#pragma once

// The Duhamel product
//   (f * g)(z) = d/dz int_0^z f(z - t) g(t) dt = int_0^z f'(z - t) g(t) dt + f(0) g(z),
// which on coefficients reads c_k = sum_{i+j=k} (i! j! / k!) a_i b_j.
// Weighting a_k by k! (the Borel transform) turns it into the Cauchy product.

#include <string>

#include "adisc/series.hpp"
#include "adisc/spaces.hpp"

namespace adisc {

// Result degree min(deg f, deg g). Weights 1 / binom(k, i) come from the
// multiplicative recurrence in long double, so no factorial is ever formed.
Series duhamel(const Series& f, const Series& g);

// a_k -> k! a_k and back.
Series borel(const Series& f);
Series inverse_borel(const Series& f);

struct OracleResult {
  Complex value;
  int nodes = 0;  // Gauss-Legendre nodes at convergence
};

// int_0^z f'(z - t) g(t) dt + f(0) g(z) by Gauss-Legendre along the segment
// [0, z], doubling the node count until two successive values agree to 1e-14
// relative to the summed magnitude of the quadrature terms.
// Requires |z| < 1; throws Error(Quadrature) if no convergence by 1024 nodes.
OracleResult duhamel_oracle(const Series& f, const Series& g, Complex z);

struct DuhamelResidual {
  double max_residual = 0.0;
  int witness_i = 0;  // the pair (z^i, z^j) attaining the maximum
  int witness_j = 0;
  bool verdict = true;  // max_residual < tolerance
  double tolerance = 0.0;
  int basis_degree = 0;
  SpaceSpec space;
};

// max over 0 <= i <= j <= basis_degree of
//   || C_phi(z^i * z^j) - (C_phi z^i) * (C_phi z^j) ||_space,
// at the truncation degree of phi. phi must be a self-map (Error(NotSelfMap)).
DuhamelResidual duhamel_residual(const Series& phi, const SpaceSpec& space, int basis_degree,
                                 double tolerance = 1e-9);

struct DuhamelClassification {
  bool multiplicative = false;
  int witness_index = -1;  // offending coefficient index, -1 when multiplicative
  double witness_magnitude = 0.0;
  std::string explanation;
};

// C_phi is Duhamel multiplicative iff phi(z) = a z: true iff |a_0| and every
// |a_k|, k >= 2, fall below tol * max(1, max_k |a_k|).
DuhamelClassification classify_duhamel_multiplicative(const Series& phi, double tol = 1e-9);

}  // namespace adisc
