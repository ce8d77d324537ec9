#include "adisc/spaces.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "adisc/error.hpp"
#include "adisc/quadrature.hpp"
#include "adisc/special.hpp"
#include "fft.hpp"

namespace adisc {
namespace {

constexpr double kGolden = 0.6180339887498949;
constexpr int kBlochRadialGrid = 256;
constexpr int kGoldenIterations = 32;
constexpr int kAscentSweeps = 12;

// ---------------------------------------------------------------- parsing

double parse_number(std::string_view text, std::string_view context) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    fail(ErrorCode::Parse, "space spec: bad number '" + std::string(text) + "' in '" + std::string(context) + "'");
  }
  return value;
}

// ------------------------------------------------------- angular sampling

int angular_samples(int degree, double p) {
  const int mult = static_cast<int>(std::ceil(p / 2.0)) + 1;
  return std::max(256, detail::next_pow2(mult * (degree + 1) + 1));
}

double mean_power(std::span<const Complex> values, double p) {
  double s = 0.0;
  if (p == 2.0) {
    for (const Complex& v : values) s += std::norm(v);
  } else if (p == 1.0) {
    for (const Complex& v : values) s += std::abs(v);
  } else {
    for (const Complex& v : values) s += std::pow(std::abs(v), p);
  }
  return s / static_cast<double>(values.size());
}

double circle_mean_with(const Series& f, double p, double r, int m, std::vector<Complex>& buf) {
  buf.resize(static_cast<std::size_t>(m));
  detail::sample_on_circle(f.coeffs().first(static_cast<std::size_t>(f.effective_degree()) + 1), r, buf);
  return mean_power(buf, p);
}

// --------------------------------------------------------- area integrals

struct Resolution {
  int inner = 48;
  int outer = 64;
  int angular = 256;
};

Resolution resolution_for(int degree, double p) {
  Resolution res;
  const double pp = std::max(p, 2.0);
  res.outer = std::max(64, static_cast<int>(std::ceil(degree * pp / 4.0)) + 16);
  res.inner = std::max(48, res.outer / 2);
  res.angular = angular_samples(degree, p);
  return res;
}

Resolution coarsen(const Resolution& res, int degree, double p) {
  Resolution c;
  c.inner = std::max(8, res.inner * 3 / 4);
  c.outer = std::max(8, res.outer * 3 / 4);
  c.angular = res.angular / 2 > degree * std::max(1, static_cast<int>(std::ceil(p / 2.0))) ? res.angular / 2 : res.angular;
  return c;
}

double area_integral_at(const Series& f, double p, double alpha, const Resolution& res) {
  const auto rule = radial_rule(alpha, res.inner, res.outer);
  std::vector<Complex> buf;
  double total = 0.0;
  for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
    total += rule->weights[i] * circle_mean_with(f, p, rule->nodes[i], res.angular, buf);
  }
  return total;
}

struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

// Returns (int |f|^p dA_alpha)^(1/p) with a coarse-rule error estimate.
Estimate area_norm(const Series& f, double p, double alpha) {
  const int d = f.effective_degree();
  const Resolution fine = resolution_for(d, p);
  const double v = std::pow(area_integral_at(f, p, alpha, fine), 1.0 / p);
  const double vc = std::pow(area_integral_at(f, p, alpha, coarsen(fine, d, p)), 1.0 / p);
  return {v, std::abs(v - vc)};
}

// ------------------------------------------------------- sup on a circle

double abs_at(std::span<const Complex> coeffs, double r, double theta) {
  return std::abs(horner(coeffs, std::polar(r, theta)));
}

template <class F>
double golden_maximize(F&& h, double lo, double hi, int iterations, double* previous_best = nullptr) {
  double a = lo;
  double b = hi;
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = h(x1);
  double f2 = h(x2);
  double best = std::max({h(lo), h(hi), f1, f2});
  double before = best;
  for (int i = 0; i < iterations; ++i) {
    before = best;
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = h(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = h(x1);
    }
    best = std::max({best, f1, f2});
  }
  if (previous_best != nullptr) *previous_best = before;
  return best;
}

// Location of the larger of the golden search's final points, or `start`
// when nothing beats it.
template <class F>
double golden_argmax(F&& h, double lo, double hi, int iterations, double start) {
  double a = lo;
  double b = hi;
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = h(x1);
  double f2 = h(x2);
  double best_x = start;
  double best = h(start);
  for (int i = 0; i < iterations; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = h(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = h(x1);
    }
  }
  if (f1 > best) best_x = x1, best = f1;
  if (f2 > best) best_x = x2;
  return best_x;
}

// Indices of the `count` largest local maxima of a (cyclic or open) sequence.
std::vector<std::size_t> top_local_maxima(std::span<const double> v, bool cyclic, std::size_t count) {
  std::vector<std::size_t> idx;
  const std::size_t n = v.size();
  for (std::size_t j = 0; j < n; ++j) {
    const double left = (j > 0) ? v[j - 1] : (cyclic ? v[n - 1] : -1.0);
    const double right = (j + 1 < n) ? v[j + 1] : (cyclic ? v[0] : -1.0);
    if (v[j] >= left && v[j] >= right) idx.push_back(j);
  }
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  if (idx.size() > count) idx.resize(count);
  return idx;
}

int circle_samples(int degree) { return std::max(256, detail::next_pow2(4 * (degree + 1))); }

double sampled_circle_max(std::span<const Complex> coeffs, double r, std::vector<Complex>& buf) {
  detail::sample_on_circle(coeffs, r, buf);
  double best = 0.0;
  for (const Complex& v : buf) best = std::max(best, std::norm(v));
  return std::sqrt(best);
}

double refined_circle_max(std::span<const Complex> coeffs, double r, std::vector<Complex>& buf,
                          std::vector<double>& mags) {
  detail::sample_on_circle(coeffs, r, buf);
  mags.resize(buf.size());
  // squared moduli locate the same maxima without a hypot per sample
  for (std::size_t j = 0; j < buf.size(); ++j) mags[j] = std::norm(buf[j]);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(buf.size());
  double best = std::sqrt(*std::max_element(mags.begin(), mags.end()));
  if (r == 0.0) return best;
  for (std::size_t j : top_local_maxima(mags, true, 2)) {
    const double theta = step * static_cast<double>(j);
    best = std::max(best, golden_maximize([&](double t) { return abs_at(coeffs, r, t); }, theta - step, theta + step,
                                          kGoldenIterations));
  }
  return best;
}

// sup over r in [r_lo, 1) of (1 - r^2) max_{|z|=r} |g|.
//
// Grid cells [r_j, r_j+1] whose majorant (1 - r_j^2) sum |g_k| r_j+1^k falls
// below the best value seen so far cannot hold the sup and are not sampled.
Estimate weighted_sup(const Series& g, double r_lo) {
  const auto coeffs = g.coeffs().first(static_cast<std::size_t>(g.effective_degree()) + 1);
  const int m = circle_samples(g.effective_degree());
  std::vector<Complex> buf(static_cast<std::size_t>(m));
  std::vector<double> mags;
  std::vector<double> abs_coeffs(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) abs_coeffs[k] = std::abs(coeffs[k]);
  auto majorant = [&](double r) {
    double acc = 0.0;
    for (auto it = abs_coeffs.rbegin(); it != abs_coeffs.rend(); ++it) acc = acc * r + *it;
    return acc;
  };
  const double span = 1.0 - r_lo;
  auto radius = [&](int j) { return std::min(1.0, r_lo + span * static_cast<double>(j) / kBlochRadialGrid); };
  auto cell_bound = [&](int j) {
    const double r = radius(j);
    return (1.0 - r * r) * majorant(radius(j + 1));
  };

  std::vector<double> grid(kBlochRadialGrid, -1.0);  // -1: not sampled
  double best = 0.0;
  for (int j = 0; j < kBlochRadialGrid; ++j) {
    const bool live = cell_bound(j) >= best || (j > 0 && cell_bound(j - 1) >= best);
    if (!live) continue;
    const double r = radius(j);
    const double v = (1.0 - r * r) * sampled_circle_max(coeffs, r, buf);
    grid[static_cast<std::size_t>(j)] = v;
    best = std::max(best, v);
  }

  // Coordinate-wise golden ascent in (r, theta) from the best samples around
  // each radial peak; sweeps stop once a full sweep no longer improves.
  const double dr = span / kBlochRadialGrid;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
  auto h = [&](double r, double t) { return (1.0 - r * r) * abs_at(coeffs, r, t); };
  double before = best;
  for (std::size_t j : top_local_maxima(grid, false, 3)) {
    if (grid[j] < 0.0) continue;
    const double r0 = radius(static_cast<int>(j));
    detail::sample_on_circle(coeffs, r0, buf);
    mags.resize(buf.size());
    for (std::size_t k = 0; k < buf.size(); ++k) mags[k] = std::norm(buf[k]);
    for (std::size_t k : top_local_maxima(mags, true, 2)) {
      double r = r0;
      double t = step * static_cast<double>(k);
      double cur = h(r, t);
      double prev = cur;
      for (int sweep = 0; sweep < kAscentSweeps; ++sweep) {
        prev = cur;
        const double lo = std::max(r_lo, r - dr);
        const double hi = std::min(1.0, r + dr);
        r = golden_argmax([&](double x) { return h(x, t); }, lo, hi, kGoldenIterations, r);
        t = golden_argmax([&](double x) { return h(r, x); }, t - step, t + step, kGoldenIterations, t);
        cur = h(r, t);
        if (cur - prev <= 1e-15 * cur) break;
      }
      if (cur > best) {
        best = cur;
        before = prev;
      }
    }
  }
  const double floor = 4.0 * std::numeric_limits<double>::epsilon() * best;
  return {best, std::abs(best - before) + floor};
}

void require_p(double p, double minimum, const char* what) {
  if (!(p >= minimum) || !std::isfinite(p)) {
    fail(ErrorCode::InvalidArgument, std::string(what) + ": exponent p = " + std::to_string(p) + " out of range");
  }
}

Series padded_product(const Series& a, const Series& b) {
  const int d = a.effective_degree() + b.effective_degree();
  return cauchy_mul(a.with_degree(d), b.with_degree(d));
}

}  // namespace

// ============================================================== SpaceSpec

SpaceSpec SpaceSpec::hardy(double p) { return SpaceSpec{SpaceKind::Hardy, p, 0.0}; }
SpaceSpec SpaceSpec::bergman(double p, double alpha) { return SpaceSpec{SpaceKind::Bergman, p, alpha}; }
SpaceSpec SpaceSpec::bloch() { return SpaceSpec{SpaceKind::Bloch, 1.0, 0.0}; }
SpaceSpec SpaceSpec::little_bloch() { return SpaceSpec{SpaceKind::LittleBloch, 1.0, 0.0}; }
SpaceSpec SpaceSpec::besov(double p) { return SpaceSpec{SpaceKind::Besov, p, 0.0}; }
SpaceSpec SpaceSpec::sup() { return SpaceSpec{SpaceKind::Sup, 1.0, 0.0}; }

void SpaceSpec::validate() const {
  switch (kind) {
    case SpaceKind::Hardy:
    case SpaceKind::Besov:
      require_p(p, 1.0, kind == SpaceKind::Hardy ? "hardy" : "besov");
      break;
    case SpaceKind::Bergman:
      require_p(p, 1.0, "bergman");
      if (!(alpha > -1.0) || !std::isfinite(alpha)) {
        fail(ErrorCode::InvalidArgument, "bergman: weight exponent a = " + std::to_string(alpha) + " must exceed -1");
      }
      break;
    case SpaceKind::Bloch:
    case SpaceKind::LittleBloch:
    case SpaceKind::Sup:
      break;
  }
}

SpaceSpec SpaceSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  std::string_view params = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  SpaceSpec spec;
  bool have_p = false;
  bool have_a = false;
  while (!params.empty()) {
    const auto comma = params.find(',');
    const std::string_view item = params.substr(0, comma);
    params = comma == std::string_view::npos ? std::string_view{} : params.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) fail(ErrorCode::Parse, "space spec: expected key=value in '" + std::string(text) + "'");
    const std::string_view key = item.substr(0, eq);
    const double value = parse_number(item.substr(eq + 1), text);
    if (key == "p") {
      spec.p = value;
      have_p = true;
    } else if (key == "a" || key == "alpha") {
      spec.alpha = value;
      have_a = true;
    } else {
      fail(ErrorCode::Parse, "space spec: unknown parameter '" + std::string(key) + "'");
    }
  }
  auto no_params = [&] {
    if (have_p || have_a) fail(ErrorCode::Parse, "space spec: '" + std::string(name) + "' takes no parameters");
  };
  if (name == "hardy") {
    if (have_a) fail(ErrorCode::Parse, "space spec: hardy takes only p");
    spec.kind = SpaceKind::Hardy;
    if (!have_p) spec.p = 2.0;
  } else if (name == "bergman") {
    spec.kind = SpaceKind::Bergman;
    if (!have_p) spec.p = 2.0;
  } else if (name == "besov") {
    if (have_a) fail(ErrorCode::Parse, "space spec: besov takes only p");
    spec.kind = SpaceKind::Besov;
    if (!have_p) spec.p = 2.0;
  } else if (name == "bloch") {
    no_params();
    spec = bloch();
  } else if (name == "little-bloch") {
    no_params();
    spec = little_bloch();
  } else if (name == "sup") {
    no_params();
    spec = sup();
  } else {
    fail(ErrorCode::Parse, "space spec: unknown space '" + std::string(name) + "'");
  }
  spec.validate();
  return spec;
}

namespace {
std::string format_param(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}
}  // namespace

std::string SpaceSpec::to_string() const {
  switch (kind) {
    case SpaceKind::Hardy: return "hardy:p=" + format_param(p);
    case SpaceKind::Bergman: return "bergman:p=" + format_param(p) + ",a=" + format_param(alpha);
    case SpaceKind::Bloch: return "bloch";
    case SpaceKind::LittleBloch: return "little-bloch";
    case SpaceKind::Besov: return "besov:p=" + format_param(p);
    case SpaceKind::Sup: return "sup";
  }
  return "?";
}

std::string_view to_string(NormMethod method) {
  switch (method) {
    case NormMethod::ClosedForm: return "closed_form";
    case NormMethod::Quadrature: return "quadrature";
    case NormMethod::GridSup: return "grid_sup";
  }
  return "?";
}

// ================================================================== norms

double hardy_circle_mean(const Series& f, double p, double r) {
  require_p(p, 1.0, "hardy_circle_mean");
  if (!(r >= 0.0) || r > 1.0) fail(ErrorCode::Domain, "hardy_circle_mean: radius must lie in [0, 1]");
  if (r == 0.0) return std::pow(std::abs(f[0]), p);
  std::vector<Complex> buf;
  return circle_mean_with(f, p, r, angular_samples(f.effective_degree(), p), buf);
}

double circle_max(const Series& f, double r) {
  if (!(r >= 0.0) || r > 1.0) fail(ErrorCode::Domain, "circle_max: radius must lie in [0, 1]");
  const auto coeffs = f.coeffs().first(static_cast<std::size_t>(f.effective_degree()) + 1);
  std::vector<Complex> buf(static_cast<std::size_t>(circle_samples(f.effective_degree())));
  std::vector<double> mags;
  return refined_circle_max(coeffs, r, buf, mags);
}

double weighted_area_integral(const Series& f, double p, double alpha) {
  require_p(p, 1.0, "weighted_area_integral");
  return area_integral_at(f, p, alpha, resolution_for(f.effective_degree(), p));
}

double besov_seminorm_power(const Series& f, double p) {
  if (!(p > 1.0) || !std::isfinite(p)) fail(ErrorCode::InvalidArgument, "besov seminorm: requires p > 1");
  const Series df = derivative(f);
  return area_integral_at(df, p, p - 2.0, resolution_for(df.effective_degree(), p)) / (p - 1.0);
}

double besov_mass(const Series& f, double p) {
  if (!(p > 1.0) || !std::isfinite(p)) fail(ErrorCode::InvalidArgument, "besov_mass: requires p > 1");
  return area_integral_at(f, p, p - 2.0, resolution_for(f.effective_degree(), p)) / (p - 1.0);
}

double little_bloch_defect(const Series& f, double r0) {
  if (!(r0 > 0.0 && r0 < 1.0)) fail(ErrorCode::Domain, "little_bloch_defect: r0 must lie in (0, 1)");
  return weighted_sup(derivative(f), r0).value;
}

NormResult norm(const Series& f, const SpaceSpec& space) {
  space.validate();
  switch (space.kind) {
    case SpaceKind::Hardy: {
      const int d = f.effective_degree();
      const int m = angular_samples(d, space.p);
      std::vector<Complex> buf;
      const double v = std::pow(circle_mean_with(f, space.p, 1.0, m, buf), 1.0 / space.p);
      const int mc = m / 2 > d ? m / 2 : m;
      const double vc = std::pow(circle_mean_with(f, space.p, 1.0, mc, buf), 1.0 / space.p);
      return {v, NormMethod::Quadrature, std::abs(v - vc)};
    }
    case SpaceKind::Bergman: {
      const Estimate e = area_norm(f, space.p, space.alpha);
      return {e.value, NormMethod::Quadrature, e.error};
    }
    case SpaceKind::Besov: {
      if (space.p == 1.0) {
        const Series d2 = derivative(derivative(f));
        const Estimate e = area_norm(d2, 1.0, 0.0);
        return {std::abs(f[0]) + std::abs(f[1]) + e.value, NormMethod::Quadrature, e.error};
      }
      // int (1-|z|^2)^(p-2) |f'|^p dA = (int |f'|^p dA_{p-2}) / (p-1)
      const Estimate e = area_norm(derivative(f), space.p, space.p - 2.0);
      const double scale = std::pow(space.p - 1.0, -1.0 / space.p);
      return {std::abs(f[0]) + scale * e.value, NormMethod::Quadrature, scale * e.error};
    }
    case SpaceKind::Bloch:
    case SpaceKind::LittleBloch: {
      const Estimate e = weighted_sup(derivative(f), 0.0);
      return {std::abs(f[0]) + e.value, NormMethod::GridSup, e.error};
    }
    case SpaceKind::Sup: {
      const auto coeffs = f.coeffs().first(static_cast<std::size_t>(f.effective_degree()) + 1);
      std::vector<Complex> buf(static_cast<std::size_t>(circle_samples(f.effective_degree())));
      std::vector<double> mags;
      const double coarse = sampled_circle_max(coeffs, 1.0, buf);
      const double v = refined_circle_max(coeffs, 1.0, buf, mags);
      return {v, NormMethod::GridSup, std::abs(v - coarse) + 4.0 * std::numeric_limits<double>::epsilon() * v};
    }
  }
  fail(ErrorCode::InvalidArgument, "norm: unknown space kind");
}

double monomial_norm_closed_form(const SpaceSpec& space, int n) {
  space.validate();
  if (n < 0) fail(ErrorCode::InvalidArgument, "monomial_norm_closed_form: n must be nonnegative");
  const double p = space.p;
  switch (space.kind) {
    case SpaceKind::Hardy:
      return 1.0;
    case SpaceKind::Bergman: {
      const double a1 = space.alpha + 1.0;
      return std::pow(a1 * beta(n * p / 2.0 + 1.0, a1), 1.0 / p);
    }
    case SpaceKind::Besov:
      if (n == 0) return 1.0;
      if (p == 1.0) return n == 1 ? 1.0 : 2.0 * (n - 1);
      return n * std::pow(beta((n - 1) * p / 2.0 + 1.0, p - 1.0), 1.0 / p);
    default:
      fail(ErrorCode::InvalidArgument, "monomial_norm_closed_form: no closed form for " + space.to_string());
  }
}

// ========================================================== growth checks

GrowthCheck bloch_growth_check(const Series& f, Complex a) { return bloch_growth_check(f, a, norm(f, SpaceSpec::bloch())); }

GrowthCheck bloch_growth_check(const Series& f, Complex a, const NormResult& b) {
  const double r = std::abs(a);
  if (!(r < 1.0)) fail(ErrorCode::Domain, "bloch_growth_check: requires |a| < 1");
  GrowthCheck out;
  out.lhs = std::abs(horner(f.coeffs(), a) - f[0]);
  out.rhs = 0.5 * std::log((1.0 + r) / (1.0 - r)) * (b.value + b.error_estimate);
  // Rounding in the two evaluations.
  const double slack = 8.0 * std::numeric_limits<double>::epsilon() * f.abs_sum();
  out.holds = out.lhs <= out.rhs + slack;
  return out;
}

BesovGrowth besov_growth_check(const Series& f, double p, Complex z, double constant) {
  if (!(p > 1.0)) fail(ErrorCode::InvalidArgument, "besov_growth_check: requires p > 1");
  return besov_growth_check(f, p, z, constant, norm(f, SpaceSpec::besov(p)).value);
}

BesovGrowth besov_growth_check(const Series& f, double p, Complex z, double constant, double nb) {
  if (!(p > 1.0)) fail(ErrorCode::InvalidArgument, "besov_growth_check: requires p > 1");
  const double r = std::abs(z);
  if (!(r < 1.0)) fail(ErrorCode::Domain, "besov_growth_check: requires |z| < 1");
  const double envelope = std::pow(std::log(2.0 / (1.0 - r * r)), 1.0 - 1.0 / p);
  BesovGrowth out;
  const double value = std::abs(horner(f.coeffs(), z));
  out.ratio = nb > 0.0 ? value / (nb * envelope) : 0.0;
  out.holds = out.ratio <= constant;
  return out;
}

MultiplierCheck besov_multiplier_check(const Series& f, const Series& g, double p) {
  if (!(p > 1.0) || !std::isfinite(p)) fail(ErrorCode::InvalidArgument, "besov_multiplier_check: requires p > 1");
  const Series fg = padded_product(f, g);
  const Series d_fg = derivative(fg);
  const Series f_dg = padded_product(f, derivative(g));
  const Series df_g = padded_product(derivative(f), g);
  // One resolution for all three integrals keeps the pointwise inequality
  // |(fg)'|^p <= 2^p (|f g'|^p + |f' g|^p) intact node by node.
  const int d = std::max({d_fg.effective_degree(), f_dg.effective_degree(), df_g.effective_degree()});
  const Resolution res = resolution_for(d, p);
  MultiplierCheck out;
  out.lhs = area_integral_at(d_fg, p, p - 2.0, res) / (p - 1.0);
  out.term_f_dg = area_integral_at(f_dg, p, p - 2.0, res) / (p - 1.0);
  out.term_df_g = area_integral_at(df_g, p, p - 2.0, res) / (p - 1.0);
  out.rhs = std::pow(2.0, p) * (out.term_f_dg + out.term_df_g);
  out.holds = std::isfinite(out.lhs) && out.lhs <= out.rhs * (1.0 + 1e-12);
  return out;
}

}  // namespace adisc
