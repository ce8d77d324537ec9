#include "adisc/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <tuple>

#include "adisc/error.hpp"

namespace adisc {
namespace {

GaussLegendre build_gauss_legendre(int n) {
  GaussLegendre rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) p0 = 1.0;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

bool is_nonnegative_integer(double x) { return x >= 0.0 && x == std::floor(x); }

bool inverse_is_integer(double alpha) {
  const double q = 1.0 / (alpha + 1.0);
  return std::abs(q - std::round(q)) < 1e-12;
}

class RuleBuilder {
public:
  explicit RuleBuilder(double alpha) { rule_.alpha = alpha; }

  // Adds sum_j w_j F(r(x_j)) for int_a^b g(x) F(r(x)) dx with Gauss-Legendre in x.
  template <class RadiusOf, class WeightOf>
  void panel(double a, double b, int n, RadiusOf radius_of, WeightOf weight_of) {
    const GaussLegendre& gl = gauss_legendre(n);
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (b + a);
    for (int j = 0; j < n; ++j) {
      const double x = mid + half * gl.nodes[static_cast<std::size_t>(j)];
      const double w = half * gl.weights[static_cast<std::size_t>(j)] * weight_of(x);
      if (w <= 0.0) continue;
      rule_.nodes.push_back(radius_of(x));
      rule_.weights.push_back(w);
    }
  }

  RadialRule take() { return std::move(rule_); }

private:
  RadialRule rule_;
};

RadialRule build_radial_rule(double alpha, int inner, int outer) {
  constexpr double kSplit = 0.5;
  const double u_max = 1.0 - kSplit * kSplit;
  const double a1 = alpha + 1.0;
  RuleBuilder b(alpha);

  b.panel(0.0, kSplit, inner, [](double r) { return r; },
          [&](double r) { return a1 * 2.0 * r * std::pow(1.0 - r * r, alpha); });

  auto radius_of_u = [](double u) { return std::sqrt(1.0 - u); };
  // int_0^U (alpha+1) u^alpha F du over [lo, hi] via t = u^(alpha+1): int F(u(t)) dt.
  auto t_panel = [&](double u_lo, double u_hi, int n) {
    b.panel(std::pow(u_lo, a1), std::pow(u_hi, a1), n,
            [&](double t) { return std::sqrt(1.0 - std::pow(t, 1.0 / a1)); }, [](double) { return 1.0; });
  };

  if (is_nonnegative_integer(alpha)) {
    b.panel(0.0, u_max, outer, radius_of_u, [&](double u) { return a1 * std::pow(u, alpha); });
  } else if (alpha < 0.0 && inverse_is_integer(alpha)) {
    t_panel(0.0, u_max, outer);
  } else {
    constexpr double kRatio = 0.15;
    const int per_panel = std::max(16, outer / 4);
    double hi = u_max;
    // Panels shrink geometrically toward u = 0 until the leftover mass
    // (alpha+1) int_0^lo u^alpha du = lo^(alpha+1) is negligible or tiny in u.
    while (true) {
      const double lo = hi * kRatio;
      b.panel(lo, hi, per_panel, radius_of_u, [&](double u) { return a1 * std::pow(u, alpha); });
      hi = lo;
      if (hi < 1e-10 || std::pow(hi, a1) < 1e-18) break;
    }
    t_panel(0.0, hi, per_panel);
  }
  return b.take();
}

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
  if (n < 1 || n > 4096) fail(ErrorCode::InvalidArgument, "gauss_legendre: node count out of range: " + std::to_string(n));
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussLegendre>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussLegendre>(build_gauss_legendre(n));
  return *slot;
}

std::shared_ptr<const RadialRule> radial_rule(double alpha, int inner_nodes, int outer_nodes) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) fail(ErrorCode::Domain, "radial_rule: weight exponent must exceed -1");
  static std::mutex mutex;
  static std::map<std::tuple<double, int, int>, std::shared_ptr<const RadialRule>> cache;
  const auto key = std::make_tuple(alpha, inner_nodes, outer_nodes);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const RadialRule>(build_radial_rule(alpha, inner_nodes, outer_nodes));
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(rule)).first->second;
}

}  // namespace adisc
