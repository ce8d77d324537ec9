#include "adisc/special.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "adisc/error.hpp"

namespace adisc {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) fail(ErrorCode::Domain, std::string(what) + ": argument must be positive and finite");
}

double lanczos_log_gamma(double x) {
  // Valid for x >= 1/2.
  const double xm1 = x - 1.0;
  double series = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) series += kLanczosCoeffs[i] / (xm1 + static_cast<double>(i));
  const double t = xm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (xm1 + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  if (x < 0.5) {
    // Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - lanczos_log_gamma(1.0 - x);
  }
  return lanczos_log_gamma(x);
}

double gamma_fn(double x) { return std::exp(log_gamma(x)); }

double beta(double x, double y) {
  require_positive(x, "beta");
  require_positive(y, "beta");
  return std::exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y));
}

double beta_asymptotic_ratio(double x, double y) {
  require_positive(x, "beta_asymptotic_ratio");
  require_positive(y, "beta_asymptotic_ratio");
  return std::exp(log_gamma(x) - log_gamma(x + y) + y * std::log(x));
}

}  // namespace adisc
