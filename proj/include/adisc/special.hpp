#pragma once

namespace adisc {

// Lanczos approximation (g = 7, 9 terms) with reflection below 1/2.
// Throws Error(Domain) unless x > 0.
double log_gamma(double x);
double gamma_fn(double x);

// B(x, y) = exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y)); x, y > 0.
double beta(double x, double y);

// B(x, y) x^y / Gamma(y); tends to 1 as x -> infinity with y fixed.
double beta_asymptotic_ratio(double x, double y);

}  // namespace adisc
