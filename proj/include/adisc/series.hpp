#pragma once

// Truncated Taylor series on the unit disc.
//
// A Series stores the coefficients a_0..a_N of z^0..z^N. The truncation
// degree N is fixed at construction. Binary operations return a series of
// degree min(deg f, deg g): every coefficient of the result is then fully
// determined by the stored coefficients of the inputs.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace adisc {

using Complex = std::complex<double>;

inline constexpr int kDefaultDegree = 64;
inline constexpr int kMaxWorkingDegree = 1024;

class Series {
public:
  // The zero series of degree 0.
  Series();
  // Throws Error(InvalidArgument) on an empty vector or non-finite entries.
  explicit Series(std::vector<Complex> coeffs);

  static Series zero(int degree);
  static Series constant(Complex c, int degree);
  static Series monomial(int power, int degree, Complex c = 1.0);
  // The identity map z.
  static Series identity(int degree) { return monomial(1, degree); }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  // Coefficient of z^k; zero outside [0, degree].
  Complex operator[](int k) const noexcept {
    return (k >= 0 && k <= degree()) ? coeffs_[static_cast<std::size_t>(k)] : Complex{};
  }

  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  // Index of the last nonzero coefficient (0 for the zero series).
  int effective_degree() const noexcept;

  // Pads with zeros or truncates to the requested degree.
  Series with_degree(int degree) const;

  // Sum of |a_k|; an upper bound for sup |f| on the closed disc.
  double abs_sum() const noexcept;

  // Largest |a_k|.
  double max_abs_coeff() const noexcept;

  bool operator==(const Series& other) const = default;

private:
  std::vector<Complex> coeffs_;
};

Series add(const Series& f, const Series& g);
Series sub(const Series& f, const Series& g);
Series scale(const Series& f, Complex c);
Series cauchy_mul(const Series& f, const Series& g);

inline Series operator+(const Series& f, const Series& g) { return add(f, g); }
inline Series operator-(const Series& f, const Series& g) { return sub(f, g); }
inline Series operator*(const Series& f, const Series& g) { return cauchy_mul(f, g); }
inline Series operator*(Complex c, const Series& f) { return scale(f, c); }

// f' has degree max(N-1, 0); the antiderivative has degree N+1 and zero constant term.
Series derivative(const Series& f);
Series antiderivative(const Series& f);

// Horner evaluation. Requires |z| <= 1 (with 1e-12 slack for unimodular points).
Complex evaluate(const Series& f, Complex z);
// Horner evaluation without the closed-disc precondition.
Complex horner(std::span<const Complex> coeffs, Complex z) noexcept;

enum class ComposePath { Triangular, Resampling };

struct ComposeResult {
  Series series;
  double error_estimate = 0.0;
  ComposePath path = ComposePath::Triangular;
};

struct ComposeOptions {
  // When true, f is taken to be exactly the polynomial it stores. When false,
  // f is the truncation of an infinite series, and phi(0) != 0 then requires
  // sup |phi| < 1 on the unit circle with a geometric tail bound reported.
  bool f_is_polynomial = true;
};

// Taylor coefficients of f(phi(z)) through degree min(deg f, deg phi).
//   phi(0) == 0: triangular Horner recursion, exact up to rounding.
//   phi(0) != 0: f(phi) sampled on the unit circle and re-expanded by FFT.
ComposeResult compose_detailed(const Series& f, const Series& phi, ComposeOptions options = {});
Series compose(const Series& f, const Series& phi);

// g with (z - w) g(z) = f(z) - f(w), by synthetic division. Requires |w| < 1.
Series deflate_at(const Series& f, Complex w);

Series exp_series(const Series& f);
// Principal branch at the constant term; f(0) must be nonzero.
Series log_series(const Series& f);
Series pow_series(const Series& f, double exponent);

// Values of f at M equispaced points r e^{2 pi i j / M}, j = 0..M-1.
// Requires 0 < r <= 1 and M >= degree + 1.
std::vector<Complex> sample_circle(const Series& f, double r, int samples);
// Inverse of sample_circle; the result has degree M - 1.
Series coeffs_from_samples(std::span<const Complex> values, double r);

// a_k = sigma rho^k zeta_k with zeta_k standard complex Gaussians (E|zeta|^2 = 1).
Series random_series(std::uint64_t seed, int degree, double rho, double sigma);

// Mixes a base seed with a stream index (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

}  // namespace adisc
