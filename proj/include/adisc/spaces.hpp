#pragma once

// Norms on spaces of analytic functions on the unit disc.
//
// dA is normalized area measure, so the disc has mass 1. All norms of a
// Series treat it as the polynomial it stores.
//
//   Hardy H^p         (mean over |z| = 1 of |f|^p)^(1/p)
//   Bergman A^p_a     (int |f|^p (a+1)(1-|z|^2)^a dA)^(1/p)
//   Bloch / little    |f(0)| + sup (1-|z|^2)|f'(z)|
//   Besov B_p, p > 1  |f(0)| + (int (1-|z|^2)^(p-2) |f'|^p dA)^(1/p)
//   Besov B_1         |f(0)| + |f'(0)| + int |f''| dA
//   Sup               max over |z| = 1 of |f|

#include <string>
#include <string_view>

#include "adisc/series.hpp"

namespace adisc {

enum class SpaceKind { Hardy, Bergman, Bloch, LittleBloch, Besov, Sup };

struct SpaceSpec {
  SpaceKind kind = SpaceKind::Hardy;
  double p = 2.0;
  double alpha = 0.0;  // Bergman only

  static SpaceSpec hardy(double p);
  static SpaceSpec bergman(double p, double alpha);
  static SpaceSpec bloch();
  static SpaceSpec little_bloch();
  static SpaceSpec besov(double p);
  static SpaceSpec sup();

  // Throws Error(InvalidArgument) when parameters are out of range.
  void validate() const;

  // "hardy:p=2", "bergman:p=2,a=0", "bloch", "little-bloch", "besov:p=2", "sup".
  static SpaceSpec parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const SpaceSpec&) const = default;
};

enum class NormMethod { ClosedForm, Quadrature, GridSup };

std::string_view to_string(NormMethod method);

struct NormResult {
  double value = 0.0;
  NormMethod method = NormMethod::Quadrature;
  double error_estimate = 0.0;
};

NormResult norm(const Series& f, const SpaceSpec& space);

// Exact ||z^n|| for Hardy (1), Bergman and Besov; other kinds throw.
//   Bergman:      ((a+1) B(np/2 + 1, a + 1))^(1/p)
//   Besov p > 1:  n B((n-1)p/2 + 1, p - 1)^(1/p)   (n >= 1), so ||z^n/n|| = B(...)^(1/p)
//   Besov p = 1:  2(n-1) for n >= 2, 1 for n <= 1
double monomial_norm_closed_form(const SpaceSpec& space, int n);

// (1/2pi) int |f(r e^{it})|^p dt, by M equispaced samples.
double hardy_circle_mean(const Series& f, double p, double r);

// max over |z| = r of |f|, dense sampling followed by golden-section refinement.
double circle_max(const Series& f, double r);

// int_D |f|^p (alpha+1)(1-|z|^2)^alpha dA by the radial rule.
double weighted_area_integral(const Series& f, double p, double alpha);

// sup over r0 <= |z| < 1 of (1-|z|^2)|f'(z)|.
double little_bloch_defect(const Series& f, double r0);

// int_D (1-|z|^2)^(p-2) |f(z)|^p dA, p > 1.
double besov_mass(const Series& f, double p);

// int_D (1-|z|^2)^(p-2) |f'(z)|^p dA, p > 1: the p-th power of the Besov seminorm.
double besov_seminorm_power(const Series& f, double p);

// |f(a) - f(0)| <= (1/2) log((1+|a|)/(1-|a|)) (||f||_Bloch + error estimate).
struct GrowthCheck {
  bool holds = true;
  double lhs = 0.0;
  double rhs = 0.0;
};
GrowthCheck bloch_growth_check(const Series& f, Complex a);
// Same, with a Bloch norm computed once by the caller.
GrowthCheck bloch_growth_check(const Series& f, Complex a, const NormResult& bloch_norm);

// |f(z)| <= C ||f||_{B_p} (log(2/(1-|z|^2)))^(1-1/p) for the supplied constant C.
// `ratio` is |f(z)| / (||f||_{B_p} (log ...)^(1-1/p)), the empirical constant at z.
struct BesovGrowth {
  bool holds = true;
  double ratio = 0.0;
};
BesovGrowth besov_growth_check(const Series& f, double p, Complex z, double constant);
BesovGrowth besov_growth_check(const Series& f, double p, Complex z, double constant, double besov_norm);

// The product rule split for f g in B_p with g a polynomial:
//   int w |(fg)'|^p <= 2^p (int w |f g'|^p + int w |f' g|^p),  w = (1-|z|^2)^(p-2).
struct MultiplierCheck {
  bool holds = true;
  double lhs = 0.0;            // seminorm^p of fg
  double term_f_dg = 0.0;      // int w |f g'|^p
  double term_df_g = 0.0;      // int w |f' g|^p
  double rhs = 0.0;            // 2^p (term_f_dg + term_df_g)
};
MultiplierCheck besov_multiplier_check(const Series& f, const Series& g, double p);

}  // namespace adisc
