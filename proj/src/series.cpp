#include "adisc/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "adisc/error.hpp"
#include "fft.hpp"

namespace adisc {
namespace {

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void require_degree(int degree) {
  if (degree < 0) fail(ErrorCode::InvalidArgument, "series degree must be nonnegative, got " + std::to_string(degree));
}

// Truncated product into a preallocated buffer of length n+1.
void mul_into(std::span<const Complex> a, std::span<const Complex> b, std::vector<Complex>& out, int n) {
  out.assign(static_cast<std::size_t>(n) + 1, Complex{});
  const int na = std::min<int>(static_cast<int>(a.size()) - 1, n);
  const int nb = static_cast<int>(b.size()) - 1;
  for (int i = 0; i <= na; ++i) {
    const Complex ai = a[static_cast<std::size_t>(i)];
    if (ai == Complex{}) continue;
    const int jmax = std::min(nb, n - i);
    for (int j = 0; j <= jmax; ++j) out[static_cast<std::size_t>(i + j)] += ai * b[static_cast<std::size_t>(j)];
  }
}

double sampled_circle_max(const Series& f) {
  const int m = std::max(256, detail::next_pow2(4 * (f.degree() + 1)));
  std::vector<Complex> values(static_cast<std::size_t>(m));
  detail::sample_on_circle(f.coeffs(), 1.0, values);
  double best = 0.0;
  for (const Complex& v : values) best = std::max(best, std::abs(v));
  return best;
}

ComposeResult compose_triangular(const Series& f, const Series& phi, int n) {
  const auto a = f.coeffs();
  std::vector<Complex> acc(static_cast<std::size_t>(n) + 1, Complex{});
  std::vector<Complex> tmp;
  const int top = f.effective_degree();
  acc[0] = a[static_cast<std::size_t>(top)];
  for (int k = top - 1; k >= 0; --k) {
    mul_into(acc, phi.coeffs(), tmp, n);
    tmp[0] += a[static_cast<std::size_t>(k)];
    acc.swap(tmp);
  }
  return {Series(std::move(acc)), 0.0, ComposePath::Triangular};
}

ComposeResult compose_resampling(const Series& f, const Series& phi, int n, const ComposeOptions& options) {
  double tail = 0.0;
  if (!options.f_is_polynomial) {
    const double rho = sampled_circle_max(phi);
    if (rho >= 1.0) {
      fail(ErrorCode::Domain,
           "compose: phi(0) != 0 and sampled sup|phi| = " + std::to_string(rho) +
               " >= 1; re-expansion of a truncated series is only defined for sup|phi| < 1");
    }
    // Unknown tail of f modelled as |a_k| <= max stored |a_k| for k > deg f.
    tail = f.max_abs_coeff() * std::pow(rho, f.degree() + 1) / (1.0 - rho);
  }
  const int df = f.effective_degree();
  const int dphi = std::max(phi.effective_degree(), 0);
  const long long product_degree = static_cast<long long>(df) * dphi;
  constexpr long long kMaxSamples = 1LL << 22;
  if (product_degree + 1 > kMaxSamples) {
    fail(ErrorCode::InvalidArgument, "compose: f o phi has degree " + std::to_string(product_degree) +
                                         ", beyond the resampling limit");
  }
  const int m = std::max(detail::next_pow2(static_cast<int>(product_degree) + 1), detail::next_pow2(n + 1));
  std::vector<Complex> values(static_cast<std::size_t>(m));
  detail::sample_on_circle(phi.coeffs(), 1.0, values);
  double sup = 0.0;
  for (Complex& v : values) {
    v = horner(f.coeffs(), v);
    sup = std::max(sup, std::abs(v));
  }
  detail::fft_forward(values);
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = values[static_cast<std::size_t>(k)] / static_cast<double>(m);
  const double rounding =
      std::numeric_limits<double>::epsilon() * sup * (std::log2(static_cast<double>(m)) + df + 1.0);
  return {Series(std::move(c)), rounding + tail, ComposePath::Resampling};
}

}  // namespace

Series::Series() : coeffs_(1, Complex{}) {}

Series::Series(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) fail(ErrorCode::InvalidArgument, "series needs at least one coefficient");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!finite(coeffs_[k])) fail(ErrorCode::InvalidArgument, "non-finite coefficient at index " + std::to_string(k));
  }
}

Series Series::zero(int degree) {
  require_degree(degree);
  return Series(std::vector<Complex>(static_cast<std::size_t>(degree) + 1));
}

Series Series::constant(Complex c, int degree) {
  require_degree(degree);
  std::vector<Complex> v(static_cast<std::size_t>(degree) + 1);
  v[0] = c;
  return Series(std::move(v));
}

Series Series::monomial(int power, int degree, Complex c) {
  require_degree(degree);
  if (power < 0 || power > degree) {
    fail(ErrorCode::InvalidArgument,
         "monomial z^" + std::to_string(power) + " does not fit in degree " + std::to_string(degree));
  }
  std::vector<Complex> v(static_cast<std::size_t>(degree) + 1);
  v[static_cast<std::size_t>(power)] = c;
  return Series(std::move(v));
}

int Series::effective_degree() const noexcept {
  for (int k = degree(); k > 0; --k) {
    if (coeffs_[static_cast<std::size_t>(k)] != Complex{}) return k;
  }
  return 0;
}

Series Series::with_degree(int degree) const {
  require_degree(degree);
  std::vector<Complex> v(coeffs_.begin(), coeffs_.begin() + std::min<std::ptrdiff_t>(degree + 1, std::ssize(coeffs_)));
  v.resize(static_cast<std::size_t>(degree) + 1);
  return Series(std::move(v));
}

double Series::abs_sum() const noexcept {
  double s = 0.0;
  for (const Complex& c : coeffs_) s += std::abs(c);
  return s;
}

double Series::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

Series add(const Series& f, const Series& g) {
  const int n = std::min(f.degree(), g.degree());
  std::vector<Complex> v(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) v[static_cast<std::size_t>(k)] = f[k] + g[k];
  return Series(std::move(v));
}

Series sub(const Series& f, const Series& g) {
  const int n = std::min(f.degree(), g.degree());
  std::vector<Complex> v(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) v[static_cast<std::size_t>(k)] = f[k] - g[k];
  return Series(std::move(v));
}

Series scale(const Series& f, Complex c) {
  std::vector<Complex> v(f.coeffs().begin(), f.coeffs().end());
  for (Complex& x : v) x *= c;
  return Series(std::move(v));
}

Series cauchy_mul(const Series& f, const Series& g) {
  const int n = std::min(f.degree(), g.degree());
  std::vector<Complex> out;
  mul_into(f.coeffs(), g.coeffs(), out, n);
  return Series(std::move(out));
}

Series derivative(const Series& f) {
  const int n = f.degree();
  if (n == 0) return Series::zero(0);
  std::vector<Complex> v(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) v[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * f[k];
  return Series(std::move(v));
}

Series antiderivative(const Series& f) {
  const int n = f.degree();
  std::vector<Complex> v(static_cast<std::size_t>(n) + 2);
  for (int k = 0; k <= n; ++k) v[static_cast<std::size_t>(k + 1)] = f[k] / static_cast<double>(k + 1);
  return Series(std::move(v));
}

Complex horner(std::span<const Complex> coeffs, Complex z) noexcept {
  Complex acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex evaluate(const Series& f, Complex z) {
  if (!finite(z) || std::abs(z) > 1.0 + 1e-12) {
    fail(ErrorCode::Domain, "evaluate: point outside the closed unit disc (|z| = " + std::to_string(std::abs(z)) + ")");
  }
  return horner(f.coeffs(), z);
}

ComposeResult compose_detailed(const Series& f, const Series& phi, ComposeOptions options) {
  const int n = std::min(f.degree(), phi.degree());
  if (phi[0] == Complex{}) return compose_triangular(f.with_degree(std::max(f.effective_degree(), 0)), phi, n);
  return compose_resampling(f, phi, n, options);
}

Series compose(const Series& f, const Series& phi) { return compose_detailed(f, phi).series; }

Series deflate_at(const Series& f, Complex w) {
  if (!finite(w) || std::abs(w) >= 1.0) {
    fail(ErrorCode::Domain, "deflate_at: requires |w| < 1 (|w| = " + std::to_string(std::abs(w)) + ")");
  }
  const int n = f.degree();
  if (n == 0) return Series::zero(0);
  std::vector<Complex> b(static_cast<std::size_t>(n));
  b[static_cast<std::size_t>(n - 1)] = f[n];
  for (int k = n - 1; k >= 1; --k) b[static_cast<std::size_t>(k - 1)] = f[k] + w * b[static_cast<std::size_t>(k)];
  return Series(std::move(b));
}

Series exp_series(const Series& f) {
  const int n = f.degree();
  std::vector<Complex> g(static_cast<std::size_t>(n) + 1);
  g[0] = std::exp(f[0]);
  // k g_k = sum_{j=1..k} j a_j g_{k-j}   (from g' = f' g)
  for (int k = 1; k <= n; ++k) {
    Complex s{};
    for (int j = 1; j <= k; ++j) s += static_cast<double>(j) * f[j] * g[static_cast<std::size_t>(k - j)];
    g[static_cast<std::size_t>(k)] = s / static_cast<double>(k);
  }
  return Series(std::move(g));
}

Series log_series(const Series& f) {
  const Complex a0 = f[0];
  if (a0 == Complex{}) fail(ErrorCode::Domain, "log_series: f(0) must be nonzero");
  const int n = f.degree();
  std::vector<Complex> g(static_cast<std::size_t>(n) + 1);
  g[0] = std::log(a0);
  // a_0 k g_k = k a_k - sum_{j=1..k-1} j g_j a_{k-j}   (from f g' = f')
  for (int k = 1; k <= n; ++k) {
    Complex s = static_cast<double>(k) * f[k];
    for (int j = 1; j < k; ++j) s -= static_cast<double>(j) * g[static_cast<std::size_t>(j)] * f[k - j];
    g[static_cast<std::size_t>(k)] = s / (static_cast<double>(k) * a0);
  }
  return Series(std::move(g));
}

Series pow_series(const Series& f, double exponent) {
  if (!std::isfinite(exponent)) fail(ErrorCode::InvalidArgument, "pow_series: exponent must be finite");
  const Complex a0 = f[0];
  if (a0 == Complex{}) fail(ErrorCode::Domain, "pow_series: f(0) must be nonzero");
  const int n = f.degree();
  std::vector<Complex> g(static_cast<std::size_t>(n) + 1);
  g[0] = std::exp(exponent * std::log(a0));
  // a_0 k g_k = sum_{j=1..k} ((gamma + 1) j - k) a_j g_{k-j}   (from f g' = gamma f' g)
  for (int k = 1; k <= n; ++k) {
    Complex s{};
    for (int j = 1; j <= k; ++j) {
      s += ((exponent + 1.0) * j - k) * f[j] * g[static_cast<std::size_t>(k - j)];
    }
    g[static_cast<std::size_t>(k)] = s / (static_cast<double>(k) * a0);
  }
  return Series(std::move(g));
}

std::vector<Complex> sample_circle(const Series& f, double r, int samples) {
  if (!(r > 0.0) || r > 1.0) fail(ErrorCode::Domain, "sample_circle: radius must lie in (0, 1], got " + std::to_string(r));
  if (samples < f.degree() + 1) {
    fail(ErrorCode::InvalidArgument, "sample_circle: need at least degree+1 = " + std::to_string(f.degree() + 1) +
                                         " samples, got " + std::to_string(samples));
  }
  std::vector<Complex> values(static_cast<std::size_t>(samples));
  detail::sample_on_circle(f.coeffs(), r, values);
  return values;
}

Series coeffs_from_samples(std::span<const Complex> values, double r) {
  if (!(r > 0.0) || r > 1.0) {
    fail(ErrorCode::Domain, "coeffs_from_samples: radius must lie in (0, 1], got " + std::to_string(r));
  }
  if (values.empty()) fail(ErrorCode::InvalidArgument, "coeffs_from_samples: no samples");
  std::vector<Complex> c(values.begin(), values.end());
  detail::fft_forward(c);
  const double m = static_cast<double>(c.size());
  double inv_rk = 1.0;
  for (Complex& x : c) {
    x = x / m * inv_rk;
    inv_rk /= r;
  }
  return Series(std::move(c));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Series random_series(std::uint64_t seed, int degree, double rho, double sigma) {
  require_degree(degree);
  if (!(rho > 0.0 && rho < 1.0)) fail(ErrorCode::InvalidArgument, "random_series: decay must lie in (0, 1)");
  if (!std::isfinite(sigma)) fail(ErrorCode::InvalidArgument, "random_series: scale must be finite");
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
  double rk = 1.0;
  for (Complex& x : c) {
    const double re = normal(gen);
    const double im = normal(gen);
    x = sigma * rk * Complex(re, im);
    rk *= rho;
  }
  return Series(std::move(c));
}

}  // namespace adisc
