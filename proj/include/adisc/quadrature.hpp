#pragma once

#include <memory>
#include <vector>

namespace adisc {

struct GaussLegendre {
  std::vector<double> nodes;    // on (-1, 1), ascending
  std::vector<double> weights;  // positive, sum to 2
};

// n-point Gauss-Legendre rule by Newton iteration on P_n. Cached and shared.
const GaussLegendre& gauss_legendre(int n);

// Radial rule for the weighted area measure dA_alpha = (alpha+1)(1-|z|^2)^alpha dA
// on the disc, reduced to the radius:
//   sum_i weights[i] F(nodes[i]) ~= (alpha+1) int_0^1 2r (1-r^2)^alpha F(r) dr.
// Weights are positive and sum to 1.
//
// Construction: Gauss-Legendre in r on [0, 1/2]; on [1/2, 1] the variable
// u = 1 - r^2 carries the weight u^alpha, handled as
//   alpha a nonnegative integer       -> Gauss-Legendre in u,
//   1/(alpha+1) a positive integer    -> t = u^(alpha+1), Gauss-Legendre in t,
//   otherwise                         -> geometrically graded panels in u,
//                                        innermost panel via the t transform.
struct RadialRule {
  double alpha = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

std::shared_ptr<const RadialRule> radial_rule(double alpha, int inner_nodes, int outer_nodes);

}  // namespace adisc
