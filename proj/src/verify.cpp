#include "adisc/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "adisc/duhamel.hpp"
#include "adisc/error.hpp"
#include "adisc/operators.hpp"
#include "adisc/special.hpp"
#include "adisc/spaces.hpp"

namespace adisc {
namespace {

using Clock = std::chrono::steady_clock;
using ordered_json = nlohmann::ordered_json;

constexpr double kEulerGamma = 0.57721566490153286;

std::string fmt(double x, int precision = 6) {
  std::ostringstream os;
  os.precision(precision);
  os << x;
  return os.str();
}

void set(CheckResult& c, bool pass) { c.status = pass ? CheckStatus::Pass : CheckStatus::Fail; }

// measured <= tolerance
void upper(CheckResult& c, double measured) {
  c.measured = measured;
  set(c, measured <= c.tolerance);
}

class Suite {
public:
  explicit Suite(const VerifyOptions& opt) : opt_(opt), widen_(std::max(1.0, 64.0 / opt.degree)) {}

  template <class Body>
  void check(CheckResult c, Body&& body) {
    if (!opt_.only.empty() && c.id.rfind(opt_.only, 0) != 0) return;
    if (c.degree_sensitive) c.tolerance *= widen_;
    const auto t0 = Clock::now();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.status = CheckStatus::Fail;
      c.detail = std::string("error: ") + e.what();
    }
    c.wall_time_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    checks_.push_back(std::move(c));
  }

  std::vector<CheckResult> take() { return std::move(checks_); }

private:
  const VerifyOptions& opt_;
  double widen_;
  std::vector<CheckResult> checks_;
};

CheckResult make(std::string id, std::string title, std::string anchor, std::string predicate, double tolerance,
                 double expected = 0.0, bool degree_sensitive = false) {
  CheckResult c;
  c.id = std::move(id);
  c.title = std::move(title);
  c.anchor = std::move(anchor);
  c.predicate = std::move(predicate);
  c.tolerance = tolerance;
  c.expected = expected;
  c.degree_sensitive = degree_sensitive;
  return c;
}

// --------------------------------------------------------------- samplers

std::mt19937_64 rng_for(std::uint64_t seed, std::uint64_t stream) { return std::mt19937_64(derive_seed(seed, stream)); }

double uniform(std::mt19937_64& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Complex gaussian(std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
  const double re = nd(rng);
  return {re, nd(rng)};
}

// Random polynomial of degree 1..max_degree rescaled so that sum |a_k| lies
// in [0.3, 0.95]: a self-map of the disc by the triangle inequality.
Series random_self_map(std::mt19937_64& rng, int max_degree, int n, bool zero_origin = false) {
  const int d = std::uniform_int_distribution<int>(1, max_degree)(rng);
  std::vector<Complex> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = gaussian(rng);
  if (zero_origin) c[0] = 0.0;
  const Series raw(std::move(c));
  const double target = uniform(rng, 0.3, 0.95);
  return scale(raw, target / raw.abs_sum()).with_degree(n);
}

double max_coeff_diff(const Series& a, const Series& b) {
  double m = 0.0;
  for (int k = 0; k <= std::max(a.degree(), b.degree()); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

double rel_diff(const Series& a, const Series& b) {
  return max_coeff_diff(a, b) / std::max({1.0, a.max_abs_coeff(), b.max_abs_coeff()});
}

// sum_{k > n} 1 / k^2 = psi_1(n + 1)
double inverse_square_tail(int n) {
  double x = n + 1.0;
  double head = 0.0;
  std::vector<double> small;
  while (x < 30.0) {
    small.push_back(1.0 / (x * x));
    x += 1.0;
  }
  const double x2 = x * x;
  double t = 1.0 / x + 1.0 / (2.0 * x2);
  double xp = x * x2;
  const double b[] = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0};
  for (double bk : b) {
    t += bk / xp;
    xp *= x2;
  }
  for (auto it = small.rbegin(); it != small.rend(); ++it) head += *it;
  return t + head;
}

std::uint64_t binomial(int n, int k) {
  std::uint64_t b = 1;
  for (int i = 0; i < k; ++i) b = b * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  return b;
}

template <class F>
double golden_max(F&& h, double lo, double hi) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = h(x1), f2 = h(x2);
  for (int i = 0; i < 200; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = h(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = h(x1);
    }
  }
  return std::max(f1, f2);
}

// --------------------------------------------------------------- criteria

void duhamel_monomials(Suite& s) {
  constexpr int kMax = 20;
  constexpr int kDeg = 2 * kMax;
  s.check(make("ac01.monomial_rule", "Duhamel product of monomials",
               "z^m * z^n = (m! n! / (m+n)!) z^(m+n), 0 <= m, n <= 20",
               "max relative error of the z^(m+n) coefficient <= tolerance; all other coefficients exactly 0", 1e-12),
          [&](CheckResult& c) {
            double worst = 0.0;
            int stray = 0;
            for (int m = 0; m <= kMax; ++m) {
              for (int n = 0; n <= kMax; ++n) {
                const Series p = duhamel(Series::monomial(m, kDeg), Series::monomial(n, kDeg));
                const double exact = 1.0 / static_cast<double>(binomial(m + n, m));
                worst = std::max(worst, std::abs(p[m + n] - exact) / exact);
                for (int k = 0; k <= kDeg; ++k) {
                  if (k != m + n && p[k] != Complex{}) ++stray;
                }
              }
            }
            upper(c, worst);
            if (stray) c.status = CheckStatus::Fail;
            c.detail = "441 pairs; stray nonzero coefficients: " + std::to_string(stray);
          });
  s.check(make("ac01.oracle", "Duhamel monomial rule against the line integral",
               "int_0^z f'(z - t) g(t) dt + f(0) g(z) at 8 points, f = z^m, g = z^n",
               "max relative deviation between quadrature and (m! n!/(m+n)!) z^(m+n) <= tolerance", 1e-8),
          [&](CheckResult& c) {
            double worst = 0.0;
            int max_nodes = 0;
            for (int m = 0; m <= kMax; ++m) {
              for (int n = 0; n <= kMax; ++n) {
                const Series f = Series::monomial(m, kDeg);
                const Series g = Series::monomial(n, kDeg);
                const double w = 1.0 / static_cast<double>(binomial(m + n, m));
                for (int j = 0; j < 8; ++j) {
                  const Complex z = std::polar(0.35 + 0.08 * j, 0.4 + 2.0 * std::numbers::pi * j / 8.0);
                  const OracleResult o = duhamel_oracle(f, g, z);
                  const Complex exact = w * std::pow(z, m + n);
                  worst = std::max(worst, std::abs(o.value - exact) / std::abs(exact));
                  max_nodes = std::max(max_nodes, o.nodes);
                }
              }
            }
            upper(c, worst);
            c.detail = "3528 evaluations, at most " + std::to_string(max_nodes) + " Gauss-Legendre nodes";
          });
}

void counterexample(Suite& s) {
  s.check(make("ac02.counterexample", "C_{z^2} is not Duhamel multiplicative",
               "C_{z^2}(z * z) = z^4/2 but (C_{z^2} z) * (C_{z^2} z) = z^4/6",
               "max(|c_4 - 1/3|, max_{k != 4} |c_k|) <= tolerance for the difference c", 1e-14, 1.0 / 3.0),
          [&](CheckResult& c) {
            const int n = kDefaultDegree;
            const Operator t = Operator::composition(Series::monomial(2, n));
            const Series z = Series::identity(n);
            const Series diff = sub(apply(t, duhamel(z, z)), duhamel(apply(t, z), apply(t, z)));
            double others = 0.0;
            for (int k = 0; k <= diff.degree(); ++k) {
              if (k != 4) others = std::max(others, std::abs(diff[k]));
            }
            upper(c, std::max(std::abs(diff[4] - 1.0 / 3.0), others));
            c.detail = "z^4 coefficient " + fmt(diff[4].real(), 17) + ", largest other coefficient " + fmt(others);
          });
}

void origin_necessity(Suite& s, const VerifyOptions& opt) {
  s.check(make("ac03.origin_necessity", "phi(0) != 0 breaks Duhamel multiplicativity",
               "at z = 0 the pair (z, z) gives phi(0)^2/2 against phi(0)^2",
               "min over 50 self-maps of ||C_phi(z * z) - phi * phi||_{H^2} / (|phi(0)|^2 / 4) >= 1", 0.0, 1.0),
          [&](CheckResult& c) {
            auto rng = rng_for(opt.seed, 0x0300);
            const int n = opt.degree;
            const Series z = Series::identity(n);
            double worst = std::numeric_limits<double>::infinity();
            int accepted = 0;
            for (int draws = 0; accepted < 50 && draws < 100000; ++draws) {
              const Series phi = random_self_map(rng, 6, n);
              const double b = std::abs(phi[0]);
              if (b < 0.05) continue;
              ++accepted;
              const Operator t = Operator::composition(phi);
              const double r =
                  norm(sub(apply(t, duhamel(z, z)), duhamel(apply(t, z), apply(t, z))), SpaceSpec::hardy(2.0)).value;
              worst = std::min(worst, r / (b * b / 4.0));
            }
            c.measured = worst;
            set(c, accepted == 50 && worst >= c.expected);
            c.detail = std::to_string(accepted) + " self-maps with |phi(0)| >= 0.05; smallest ratio " + fmt(worst);
          });
}

void classification(Suite& s, const VerifyOptions& opt) {
  const int n = opt.degree;
  const int basis = std::min(3, n / 2);
  int disagreements = 0;
  int classified = 0;
  s.check(make("ac04.linear_symbols", "phi = a z is Duhamel multiplicative",
               "C_{az}(f * g) = C_{az} f * C_{az} g, |a| <= 1",
               "max over 100 values of a of the monomial-pair residual in H^2 <= tolerance", 1e-12, 0.0, true),
          [&](CheckResult& c) {
            auto rng = rng_for(opt.seed, 0x0400);
            double worst = 0.0;
            for (int i = 0; i < 100; ++i) {
              const double theta = uniform(rng, 0.0, 2.0 * std::numbers::pi);
              const double radius = i < 10 ? 1.0 : std::sqrt(uniform(rng, 0.0, 1.0));
              const Series phi = Series::monomial(1, n, std::polar(radius, theta));
              const DuhamelResidual r = duhamel_residual(phi, SpaceSpec::hardy(2.0), basis);
              worst = std::max(worst, r.max_residual);
              const bool cls = classify_duhamel_multiplicative(phi).multiplicative;
              disagreements += (cls && r.verdict) ? 0 : 1;
              ++classified;
            }
            upper(c, worst);
            c.detail = "basis degree " + std::to_string(basis) + ", 10 of the 100 symbols unimodular";
          });
  s.check(make("ac04.nonlinear_symbols", "other self-maps are not Duhamel multiplicative",
               "C_phi Duhamel multiplicative only for phi(z) = a z",
               "min over 200 self-maps with some |a_k| >= 0.05 (k != 1) of the monomial-pair residual in H^2 > 1e-4",
               0.0, 1e-4),
          [&](CheckResult& c) {
            auto rng = rng_for(opt.seed, 0x0401);
            double worst = std::numeric_limits<double>::infinity();
            int accepted = 0;
            for (int draws = 0; accepted < 200 && draws < 100000; ++draws) {
              const Series phi = random_self_map(rng, 6, n);
              double off = 0.0;
              for (int k = 0; k <= phi.degree(); ++k) {
                if (k != 1) off = std::max(off, std::abs(phi[k]));
              }
              if (off < 0.05) continue;
              ++accepted;
              const DuhamelResidual r = duhamel_residual(phi, SpaceSpec::hardy(2.0), basis);
              worst = std::min(worst, r.max_residual);
              const bool cls = classify_duhamel_multiplicative(phi).multiplicative;
              disagreements += (cls || r.verdict) ? 1 : 0;
              ++classified;
            }
            c.measured = worst;
            set(c, accepted == 200 && worst > c.expected);
            c.detail = std::to_string(accepted) + " symbols, basis degree " + std::to_string(basis);
          });
  s.check(make("ac04.classifier_agreement", "coefficient classifier agrees with the residual",
               "phi(z) = a z  iff  C_phi commutes with the Duhamel product",
               "number of symbols where the classifier disagrees with the expected verdict <= 0", 0.0),
          [&](CheckResult& c) {
            upper(c, disagreements);
            c.detail = std::to_string(classified) + " symbols classified";
          });
}

void bergman_norms(Suite& s) {
  const double ps[] = {1.0, 2.0, 4.0};
  const double alphas[] = {-0.5, 0.0, 1.0, 2.0};
  s.check(make("ac05.bergman_quadrature", "Bergman norms of monomials by quadrature",
               "||z^n||^p_{A^p_a} = (a+1) B(np/2 + 1, a + 1)",
               "max relative error over n <= 32, p in {1,2,4}, a in {-0.5,0,1,2} <= tolerance", 1e-10),
          [&](CheckResult& c) {
            double worst = 0.0;
            std::string where;
            for (double p : ps) {
              for (double a : alphas) {
                const SpaceSpec sp = SpaceSpec::bergman(p, a);
                for (int n = 0; n <= 32; ++n) {
                  const double q = norm(Series::monomial(n, std::max(n, 1)), sp).value;
                  const double cf = monomial_norm_closed_form(sp, n);
                  const double e = std::abs(q - cf) / cf;
                  if (e > worst) {
                    worst = e;
                    where = sp.to_string() + ", n = " + std::to_string(n);
                  }
                }
              }
            }
            upper(c, worst);
            c.detail = "396 norms; worst at " + where;
          });
  s.check(make("ac05.bergman_decay", "Bergman norms of z^n decrease to 0",
               "||z^n||_{A^p_a} -> 0 as n -> infinity",
               "strictly decreasing for n <= 100 and max over the grid of (a+1) B(np/2+1, a+1) at n = 100 < 0.3",
               0.0, 0.3),
          [&](CheckResult& c) {
            bool decreasing = true;
            double worst_power = 0.0, worst_norm = 0.0;
            for (double p : ps) {
              for (double a : alphas) {
                const SpaceSpec sp = SpaceSpec::bergman(p, a);
                double prev = std::numeric_limits<double>::infinity();
                for (int n = 0; n <= 100; ++n) {
                  const double v = monomial_norm_closed_form(sp, n);
                  decreasing = decreasing && v < prev;
                  prev = v;
                }
                worst_norm = std::max(worst_norm, prev);
                worst_power = std::max(worst_power, std::pow(prev, p));
              }
            }
            c.measured = worst_power;
            set(c, decreasing && worst_power < c.expected);
            c.detail = "largest p-th power at n = 100: " + fmt(worst_power) + "; largest norm: " + fmt(worst_norm) +
                       "; strictly decreasing: " + (decreasing ? "yes" : "no");
          });
}

void besov_norms(Suite& s) {
  const double ps[] = {1.5, 2.0, 3.0};
  s.check(make("ac06.besov_quadrature", "Besov norms of z^n / n by quadrature",
               "||z^n / n||^p_{B_p} = B((n-1)p/2 + 1, p - 1)",
               "max relative error over 1 <= n <= 32, p in {1.5, 2, 3} <= tolerance", 1e-9),
          [&](CheckResult& c) {
            double worst = 0.0;
            std::string where;
            for (double p : ps) {
              const SpaceSpec sp = SpaceSpec::besov(p);
              for (int n = 1; n <= 32; ++n) {
                const double q = norm(Series::monomial(n, n, 1.0 / n), sp).value;
                const double cf = std::pow(beta((n - 1) * p / 2.0 + 1.0, p - 1.0), 1.0 / p);
                const double e = std::abs(q - cf) / cf;
                if (e > worst) {
                  worst = e;
                  where = sp.to_string() + ", n = " + std::to_string(n);
                }
              }
            }
            upper(c, worst);
            c.detail = "96 norms; worst at " + where;
          });
  s.check(make("ac06.besov_decay", "Besov norms of z^n / n decrease to 0",
               "||z^n / n||_{B_p} -> 0 as n -> infinity",
               "strictly decreasing for 2 <= n <= 10^4 at p in {1.5, 2, 3}; value at n = 10^4, p = 3 < 0.01", 0.0,
               0.01),
          [&](CheckResult& c) {
            bool decreasing = true;
            std::string values;
            double at_p3 = 0.0;
            for (double p : ps) {
              double prev = std::numeric_limits<double>::infinity();
              for (int n = 2; n <= 10000; ++n) {
                const double v = monomial_norm_closed_form(SpaceSpec::besov(p), n) / n;
                decreasing = decreasing && v < prev;
                prev = v;
              }
              if (p == 3.0) at_p3 = prev;
              values += (values.empty() ? "" : ", ") + std::string("p = ") + fmt(p) + ": " + fmt(prev);
            }
            c.measured = at_p3;
            set(c, decreasing && at_p3 < c.expected);
            c.detail = "values at n = 10^4: " + values;
          });
}

void hardy_partial_sums(Suite& s) {
  constexpr int kN = 1000;
  const Complex c0 = std::polar(1.0, 0.7);
  std::vector<HardyDemoRow> rows;
  s.check(make("ac07.hardy_tail", "partial sums of log(1/(1 - conj(c) z)) converge in H^2",
               "||f - f_n||^2_{H^2} = sum_{k > n} 1/k^2",
               "max over n <= 1000 of |(pi^2/6 - ||f_n||^2) - psi_1(n+1)| <= tolerance, strictly decreasing", 1e-12),
          [&](CheckResult& c) {
            rows = divergence_demo_hardy(c0, kN);
            double worst = 0.0;
            bool decreasing = true;
            double max_norm = 0.0;
            for (std::size_t i = 0; i < rows.size(); ++i) {
              worst = std::max(worst, std::abs(rows[i].tail_sq - inverse_square_tail(rows[i].n)));
              if (i > 0) decreasing = decreasing && rows[i].tail_sq < rows[i - 1].tail_sq;
              max_norm = std::max(max_norm, rows[i].norm_h2);
            }
            upper(c, worst);
            if (!decreasing || max_norm > std::numbers::pi / std::sqrt(6.0)) c.status = CheckStatus::Fail;
            c.detail = "tail at n = 1000: " + fmt(rows.back().tail_sq, 12) + "; max ||f_n|| = " + fmt(max_norm, 12) +
                       " <= pi/sqrt(6); strictly decreasing: " + (decreasing ? "yes" : "no");
          });
  s.check(make("ac07.harmonic_growth", "point values at the boundary diverge",
               "|f_n(c)| = H_n = sum_{k <= n} 1/k ~ ln n + gamma",
               "|H_1000 - ln 1000 - 0.5772156649| < 0.05, with |f_n(c)| = H_n to 1e-12 relative for every n", 0.05),
          [&](CheckResult& c) {
            if (rows.empty()) rows = divergence_demo_hardy(c0, kN);
            double h = 0.0, worst = 0.0;
            for (const auto& r : rows) {
              h += 1.0 / r.n;
              worst = std::max(worst, std::abs(r.value_at_c - h) / h);
            }
            const double dev = std::abs(rows.back().value_at_c - std::log(static_cast<double>(kN)) - kEulerGamma);
            c.measured = dev;
            set(c, dev < c.tolerance && worst <= 1e-12);
            c.detail = "|f_1000(c)| = " + fmt(rows.back().value_at_c, 12) + "; max relative deviation from H_n " +
                       fmt(worst);
          });
}

void bloch_polynomials(Suite& s) {
  constexpr int kN = 200;
  std::vector<std::vector<BlochDemoRow>> tables;
  s.check(make("ac08.bloch_polynomials", "odd partial sums stay in the Bloch unit ball",
               "p_n = sum_{k<n} (conj(c) z)^(2k+1) / (2k+1), ||p_n||_Bloch <= 1",
               "max over n <= 200 and 8 unimodular c of ||p_n||_Bloch - 1 <= tolerance", 1e-9, 1.0),
          [&](CheckResult& c) {
            double worst = 0.0;
            for (int j = 0; j < 8; ++j) {
              tables.push_back(divergence_demo_bloch(std::polar(1.0, 2.0 * std::numbers::pi * j / 8.0), kN));
              for (const auto& r : tables.back()) worst = std::max(worst, r.norm_bloch);
            }
            c.measured = worst;
            set(c, worst - 1.0 <= c.tolerance);
            c.detail = "1600 Bloch norms; largest " + fmt(worst, 17);
          });
  s.check(make("ac08.odd_harmonic_growth", "Bloch-bounded polynomials with divergent values at c",
               "p_n(c) = sum_{k<n} 1/(2k+1) >= (1/2) ln n",
               "min over n <= 200 and 8 unimodular c of p_n(c) - (1/2) ln n >= 0", 0.0, 0.0),
          [&](CheckResult& c) {
            if (tables.empty()) {
              for (int j = 0; j < 8; ++j) {
                tables.push_back(divergence_demo_bloch(std::polar(1.0, 2.0 * std::numbers::pi * j / 8.0), kN));
              }
            }
            double margin = std::numeric_limits<double>::infinity();
            for (const auto& t : tables) {
              for (const auto& r : t) margin = std::min(margin, r.value_at_c - 0.5 * std::log(static_cast<double>(r.n)));
            }
            c.measured = margin;
            set(c, margin >= 0.0);
            c.detail = "p_200(c) = " + fmt(tables.front().back().value_at_c, 12);
          });
}

void bloch_duhamel(Suite& s, const VerifyOptions& opt) {
  s.check(make("ac09.bloch_duhamel_bound", "the Bloch space is a Banach algebra under the Duhamel product",
               "||f * g||_Bloch <= (3 + C) ||f||_Bloch ||g||_Bloch, C = max_r [2(1+r)/(2-r)] (1-r) log(1/(1-r)) < 1",
               "max over 500 seeded pairs of ||f * g|| / (||f|| ||g||) <= 3 + C <= 4", 0.0),
          [&](CheckResult& c) {
            const double cmaj = golden_max(
                [](double r) { return 2.0 * (1.0 + r) / (2.0 - r) * (1.0 - r) * std::log(1.0 / (1.0 - r)); }, 0.0,
                1.0 - 1e-12);
            c.expected = 3.0 + cmaj;
            auto rng = rng_for(opt.seed, 0x0900);
            const int n = opt.degree;
            double worst = 0.0;
            for (int t = 0; t < 500; ++t) {
              const double rho_f = uniform(rng, 0.3, 0.95);
              const double rho_g = uniform(rng, 0.3, 0.95);
              const Series f = random_series(derive_seed(opt.seed, 0x9000 + 2 * t), n / 2, rho_f, 1.0).with_degree(n);
              const Series g = random_series(derive_seed(opt.seed, 0x9001 + 2 * t), n / 2, rho_g, 1.0).with_degree(n);
              const double nf = norm(f, SpaceSpec::bloch()).value;
              const double ng = norm(g, SpaceSpec::bloch()).value;
              const double nfg = norm(duhamel(f, g), SpaceSpec::bloch()).value;
              worst = std::max(worst, nfg / (nf * ng));
            }
            c.measured = worst;
            set(c, worst <= c.expected && c.expected <= 4.0);
            c.detail = "majorant maximum C = " + fmt(cmaj, 12) + "; empirical maximum ratio " + fmt(worst, 12);
          });
}

void beta_asymptotic(Suite& s) {
  s.check(make("ac10.beta_asymptotic", "beta function asymptotics",
               "B(x, y) ~ Gamma(y) x^(-y) as x -> infinity, y = 1.5",
               "|ratio(100) - 1| <= tolerance and |ratio(x) - 1| decreasing over x = 10, 100, 1000", 0.02, 1.0),
          [&](CheckResult& c) {
            const double r10 = beta_asymptotic_ratio(10.0, 1.5);
            const double r100 = beta_asymptotic_ratio(100.0, 1.5);
            const double r1000 = beta_asymptotic_ratio(1000.0, 1.5);
            c.measured = r100;
            const bool monotone = std::abs(r10 - 1.0) > std::abs(r100 - 1.0) && std::abs(r100 - 1.0) > std::abs(r1000 - 1.0);
            set(c, std::abs(r100 - 1.0) <= c.tolerance && monotone);
            c.detail = "ratios " + fmt(r10, 10) + ", " + fmt(r100, 10) + ", " + fmt(r1000, 10);
          });
}

std::vector<Complex> adjoint_grid() {
  std::vector<Complex> xs;
  for (double r : {0.2, 0.45, 0.7, 0.9}) {
    for (int j = 0; j < 8; ++j) xs.push_back(std::polar(r, 0.3 + 2.0 * std::numbers::pi * j / 8.0));
  }
  return xs;
}

void adjoint_evaluation(Suite& s, const VerifyOptions& opt) {
  const int n = opt.degree;
  auto run = [&](CheckResult& c, bool via_matrix) {
    auto rng = rng_for(opt.seed, 0x1100);
    const auto xs = adjoint_grid();
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Series phi = random_self_map(rng, 4, n);
      const Operator comp = Operator::composition(phi);
      const Operator t = via_matrix ? matrix_of(comp, n) : comp;
      for (std::size_t j = 0; j < xs.size(); ++j) {
        worst = std::max(worst, adjoint_eval_check(t, xs[j], 10, derive_seed(opt.seed, 0x11000 + 64 * i + j), n));
      }
    }
    upper(c, worst);
    c.detail = "20 symbols of degree <= 4, 32 points, 10 probes each";
  };
  s.check(make("ac11.adjoint_evaluation", "composition operators act as f -> f(phi(x))",
               "T* K_x = K_{phi(x)}, i.e. (C_phi f)(x) = f(phi(x))",
               "max |(C_phi f)(x) - f(phi(x))| <= tolerance", 1e-11, 0.0, true),
          [&](CheckResult& c) { run(c, false); });
  s.check(make("ac11.matrix_form", "the same identity through the monomial-basis matrix",
               "Matrix(matrix_of(C_phi)) f evaluated at x equals f(phi(x))",
               "max |(M f)(x) - f(phi(x))| <= tolerance", 1e-11, 0.0, true),
          [&](CheckResult& c) { run(c, true); });
}

void boundary_functional(Suite& s, const VerifyOptions& opt) {
  s.check(make("ac12.boundary_evaluation", "multiplicative functional that is not a composition operator",
               "T f = f(c), |c| = 1: T(fg) = T(f) T(g), yet T z = c is a unimodular constant",
               "max sup-norm residual over 100 trials <= tolerance and is_self_map(symbol) = unimodular-constant",
               1e-11, 0.0, true),
          [&](CheckResult& c) {
            const Complex c0 = std::polar(1.0, 0.9);
            const Operator t = Operator::boundary_eval(c0);
            ResidualOptions ro;
            ro.trials = 100;
            ro.seed = opt.seed;
            ro.working_degree = opt.degree;
            ro.degree_budget = opt.degree / 2;
            ro.threads = opt.threads;
            const MultiplicativityReport rep = almost_mult_residual(t, SpaceSpec::sup(), ro);
            const SelfMapStatus st = is_self_map(symbol_of(t, opt.degree));
            c.measured = rep.max_residual;
            const bool unimodular = st.kind == SelfMapKind::UnimodularConstant;
            set(c, rep.max_residual <= c.tolerance && unimodular);
            c.detail = "boundary evaluation is multiplicative (max residual " + fmt(rep.max_residual) +
                       " over 100 trials) and its symbol is " + st.describe() +
                       (unimodular ? ", so it is not a composition operator" : "");
          });
}

void growth_bounds(Suite& s, const VerifyOptions& opt) {
  const int n = opt.degree;
  const double radii[] = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99};
  std::vector<Series> fs;
  std::vector<double> angles;
  {
    auto rng = rng_for(opt.seed, 0x1300);
    for (int i = 0; i < 500; ++i) {
      fs.push_back(random_series(derive_seed(opt.seed, 0x13000 + i), n, uniform(rng, 0.5, 0.95), 1.0));
      angles.push_back(uniform(rng, 0.0, 2.0 * std::numbers::pi));
    }
  }
  auto points = [&](std::size_t i) {
    std::vector<Complex> zs;
    for (double r : radii) {
      for (int j = 0; j < 8; ++j) zs.push_back(std::polar(r, angles[i] + 2.0 * std::numbers::pi * j / 8.0));
    }
    return zs;
  };
  std::vector<NormResult> bloch(fs.size());
  s.check(make("ac13.bloch_growth", "Bloch functions grow at most logarithmically",
               "|f(a) - f(0)| <= (1/2) log((1+|a|)/(1-|a|)) ||f||_Bloch",
               "violations beyond rounding slack over 500 functions x 11 radii x 8 angles <= 0", 0.0),
          [&](CheckResult& c) {
            int violations = 0;
            double worst = 0.0;
            for (std::size_t i = 0; i < fs.size(); ++i) {
              bloch[i] = norm(fs[i], SpaceSpec::bloch());
              for (Complex a : points(i)) {
                const GrowthCheck g = bloch_growth_check(fs[i], a, bloch[i]);
                violations += g.holds ? 0 : 1;
                if (g.rhs > 0.0) worst = std::max(worst, g.lhs / g.rhs);
              }
            }
            upper(c, violations);
            c.detail = "largest lhs/rhs " + fmt(worst);
          });
  s.check(make("ac13.bloch_weighted_sup", "(1 - |z|^2) |f(z)| is bounded for Bloch functions",
               "sup (1-|z|^2)|f(z)| <= K ||f||_Bloch, K = max_r (1-r^2)(1 + (1/2) log((1+r)/(1-r)))",
               "max over the grid of (1-|z|^2)|f(z)| / ||f||_Bloch <= K", 0.0),
          [&](CheckResult& c) {
            const double k = golden_max(
                [](double r) { return (1.0 - r * r) * (1.0 + 0.5 * std::log((1.0 + r) / (1.0 - r))); }, 0.0, 1.0 - 1e-12);
            c.expected = k;
            double worst = 0.0;
            for (std::size_t i = 0; i < fs.size(); ++i) {
              if (bloch[i].value == 0.0) bloch[i] = norm(fs[i], SpaceSpec::bloch());
              for (Complex a : points(i)) {
                const double r = std::abs(a);
                worst = std::max(worst, (1.0 - r * r) * std::abs(horner(fs[i].coeffs(), a)) /
                                            (bloch[i].value + bloch[i].error_estimate));
              }
            }
            c.measured = worst;
            set(c, worst <= k);
            c.detail = "K = " + fmt(k, 10);
          });
  double calibrated[3] = {0.0, 0.0, 0.0};
  std::vector<std::array<double, 3>> besov(fs.size());
  const double ps[] = {1.5, 2.0, 3.0};
  bool besov_ready = false;
  bool besov_finite = true;
  auto ensure_besov = [&] {
    if (besov_ready) return;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (int q = 0; q < 3; ++q) {
        const auto qi = static_cast<std::size_t>(q);
        besov[i][qi] = norm(fs[i], SpaceSpec::besov(ps[q])).value;
        for (Complex z : points(i)) {
          const BesovGrowth g = besov_growth_check(fs[i], ps[q], z, 0.0, besov[i][qi]);
          besov_finite = besov_finite && std::isfinite(g.ratio);
          calibrated[q] = std::max(calibrated[q], g.ratio);
        }
      }
    }
    besov_ready = true;
  };
  s.check(make("ac13.besov_growth", "calibrated constant in the Besov growth bound",
               "|f(z)| <= C ||f||_{B_p} (log(2/(1-|z|^2)))^(1-1/p)",
               "C_emp = max ratio over 500 functions x 11 radii x 8 angles is finite, for p in {1.5, 2, 3}", 0.0),
          [&](CheckResult& c) {
            ensure_besov();
            c.measured = std::max({calibrated[0], calibrated[1], calibrated[2]});
            c.expected = c.measured;
            set(c, besov_finite && std::isfinite(c.measured));
            c.detail = "C_emp: p = 1.5: " + fmt(calibrated[0]) + ", p = 2: " + fmt(calibrated[1]) + ", p = 3: " +
                       fmt(calibrated[2]);
          });
  s.check(make("ac13.besov_mass", "the Besov mass integral is finite",
               "int (1-|z|^2)^(p-2) |f|^p dA <= (C ||f||_{B_p})^p 2^(p-1) Gamma(p) / (p-1)^p",
               "violations of the bound with the calibrated C over 500 functions, p in {1.5, 2, 3} <= 0", 0.0),
          [&](CheckResult& c) {
            ensure_besov();
            int violations = 0;
            double worst = 0.0;
            for (std::size_t i = 0; i < fs.size(); ++i) {
              for (int q = 0; q < 3; ++q) {
                const double p = ps[q];
                const double mass = besov_mass(fs[i], p);
                const double nb = besov[i][static_cast<std::size_t>(q)];
                const double bound =
                    std::pow(calibrated[q] * nb, p) * std::pow(2.0, p - 1.0) * gamma_fn(p) / std::pow(p - 1.0, p);
                if (!std::isfinite(mass) || !(mass <= bound * (1.0 + 1e-12))) ++violations;
                if (bound > 0.0) worst = std::max(worst, mass / bound);
              }
            }
            upper(c, violations);
            c.detail = "largest mass / bound " + fmt(worst);
          });
}

void property_suites(Suite& s, const VerifyOptions& opt) {
  const int n = opt.degree;
  auto rs = [&](std::uint64_t stream, double rho = 0.7, double sigma = 1.0) {
    return random_series(derive_seed(opt.seed, stream), n, rho, sigma);
  };

  s.check(make("ac14.ring_axioms", "truncated polynomial ring axioms",
               "commutativity, associativity, distributivity, identity for + and the Cauchy product",
               "max coefficient error relative to max(1, max |coefficient|) over 50 triples <= tolerance", 1e-13, 0.0,
               true),
          [&](CheckResult& c) {
            double worst = 0.0;
            const Series one = Series::constant(1.0, n);
            for (int t = 0; t < 50; ++t) {
              const Series f = rs(0x14000 + 3 * t), g = rs(0x14001 + 3 * t), h = rs(0x14002 + 3 * t);
              worst = std::max({worst, rel_diff(f + g, g + f), rel_diff((f + g) + h, f + (g + h)),
                                rel_diff(f * g, g * f), rel_diff((f * g) * h, f * (g * h)),
                                rel_diff(f * (g + h), f * g + f * h), rel_diff(one * f, f)});
            }
            upper(c, worst);
          });
  s.check(make("ac14.deflation_roundtrip", "deflation at an interior point",
               "(z - w) deflate_at(f, w) + f(w) = f",
               "max coefficient error over 50 pairs (f, w), |w| < 0.95 <= tolerance", 1e-12, 0.0, true),
          [&](CheckResult& c) {
            auto rng = rng_for(opt.seed, 0x1401);
            double worst = 0.0;
            for (int t = 0; t < 50; ++t) {
              const Series f = rs(0x14100 + t, 0.8);
              const Complex w = std::polar(0.95 * std::sqrt(uniform(rng, 0.0, 1.0)), uniform(rng, 0.0, 6.283185307179586));
              const Series lin(std::vector<Complex>{-w, 1.0});
              const Series g = deflate_at(f, w).with_degree(n);
              const Series back = add(cauchy_mul(lin.with_degree(n), g), Series::constant(evaluate(f, w), n));
              worst = std::max(worst, rel_diff(back, f));
            }
            upper(c, worst);
          });
  s.check(make("ac14.borel_homomorphism", "Borel weights turn the Duhamel product into the Cauchy product",
               "B(f * g) = B(f) B(g), B: a_k -> k! a_k",
               "max over k and 50 pairs of |B(f*g)_k - (B f B g)_k| / (|B f| |B g|)_k <= tolerance", 1e-12, 0.0, true),
          [&](CheckResult& c) {
            double worst = 0.0;
            for (int t = 0; t < 50; ++t) {
              const Series f = rs(0x14200 + 2 * t), g = rs(0x14201 + 2 * t);
              const Series lhs = borel(duhamel(f, g));
              const Series rhs = cauchy_mul(borel(f), borel(g));
              const Series bf = borel(f), bg = borel(g);
              std::vector<Complex> af, ag;
              for (auto x : bf.coeffs()) af.emplace_back(std::abs(x));
              for (auto x : bg.coeffs()) ag.emplace_back(std::abs(x));
              const Series mag = cauchy_mul(Series(af), Series(ag));
              for (int k = 0; k <= n; ++k) {
                if (mag[k].real() > 0.0) worst = std::max(worst, std::abs(lhs[k] - rhs[k]) / mag[k].real());
              }
            }
            upper(c, worst);
          });
  s.check(make("ac14.matrix_roundtrip", "monomial-basis matrices reproduce every operator",
               "matrix_of(T) f = T f for composition, multiplication, boundary and point evaluation",
               "max coefficient error relative to max(1, max |coefficient|) <= tolerance", 1e-12, 0.0, true),
          [&](CheckResult& c) {
            auto rng = rng_for(opt.seed, 0x1403);
            double worst = 0.0;
            for (int t = 0; t < 10; ++t) {
              std::vector<Operator> ops{Operator::composition(random_self_map(rng, 4, n)),
                                        Operator::multiplication(rs(0x14300 + t, 0.6)),
                                        Operator::boundary_eval(std::polar(1.0, uniform(rng, 0.0, 6.283185307179586))),
                                        Operator::point_eval(std::polar(0.9 * uniform(rng, 0.0, 1.0), 1.0 + t))};
              const Series f = rs(0x14310 + t);
              for (const Operator& op : ops) worst = std::max(worst, rel_diff(apply(matrix_of(op, n), f), apply(op, f)));
            }
            upper(c, worst);
            c.detail = "40 operators";
          });
  s.check(make("ac14.parallel_determinism", "residual reports do not depend on the thread count",
               "per-trial seeds derived from (seed, trial)",
               "number of bitwise differences between 1-thread and 4-thread reports <= 0", 0.0),
          [&](CheckResult& c) {
            auto rng = rng_for(opt.seed, 0x1404);
            int diffs = 0;
            const Operator ops[] = {Operator::composition(random_self_map(rng, 4, n)),
                                    Operator::multiplication(rs(0x14400, 0.5))};
            for (const Operator& op : ops) {
              for (Product pr : {Product::Pointwise, Product::Duhamel}) {
                ResidualOptions ro;
                ro.trials = 40;
                ro.seed = opt.seed;
                ro.working_degree = n;
                ro.degree_budget = n / 2;
                ro.product = pr;
                ro.threads = 1;
                const auto a = almost_mult_residual(op, SpaceSpec::hardy(2.0), ro);
                ro.threads = 4;
                const auto b = almost_mult_residual(op, SpaceSpec::hardy(2.0), ro);
                diffs += a.max_residual != b.max_residual;
                diffs += a.mean_residual != b.mean_residual;
                diffs += a.witness_trial != b.witness_trial;
                diffs += !(a.witness_f == b.witness_f) || !(a.witness_g == b.witness_g);
              }
            }
            upper(c, diffs);
            c.detail = "4 reports of 40 trials each";
          });
  s.check(make("ac14.composition_associativity", "composition is associative on the exact path",
               "(f o phi) o psi = f o (phi o psi), phi(0) = psi(0) = 0",
               "max coefficient error relative to max(1, max |coefficient|) over 20 triples <= tolerance", 1e-11, 0.0,
               true),
          [&](CheckResult& c) {
            auto rng = rng_for(opt.seed, 0x1405);
            double worst = 0.0;
            for (int t = 0; t < 20; ++t) {
              const Series phi = random_self_map(rng, 4, n, true);
              const Series psi = random_self_map(rng, 4, n, true);
              const Series f = rs(0x14500 + t);
              worst = std::max(worst, rel_diff(compose(compose(f, phi), psi), compose(f, compose(phi, psi))));
            }
            upper(c, worst);
          });
  s.check(make("ac14.exp_log_inverse", "series exponential and logarithm are inverse",
               "log(exp(f)) = f for coefficients of modulus <= 1",
               "max coefficient error over 20 series <= tolerance", 1e-11, 0.0, true),
          [&](CheckResult& c) {
            double worst = 0.0;
            for (int t = 0; t < 20; ++t) {
              Series f = rs(0x14600 + t, 0.7);
              f = scale(f, 1.0 / std::max(1.0, f.max_abs_coeff()));
              worst = std::max(worst, max_coeff_diff(log_series(exp_series(f)), f));
            }
            upper(c, worst);
          });
  s.check(make("ac14.duhamel_algebra", "the Duhamel product is a commutative, associative product with unit 1",
               "f * g = g * f, (f * g) * h = f * (g * h), 1 * f = f",
               "max coefficient error relative to max(1, max |coefficient|) over 50 triples <= tolerance; 1 * f = f exactly",
               1e-12, 0.0, true),
          [&](CheckResult& c) {
            double worst = 0.0;
            bool identity = true;
            const Series one = Series::constant(1.0, n);
            for (int t = 0; t < 50; ++t) {
              const Series f = rs(0x14700 + 3 * t), g = rs(0x14701 + 3 * t), h = rs(0x14702 + 3 * t);
              worst = std::max({worst, rel_diff(duhamel(f, g), duhamel(g, f)),
                                rel_diff(duhamel(duhamel(f, g), h), duhamel(f, duhamel(g, h)))});
              identity = identity && duhamel(one, f) == f;
            }
            upper(c, worst);
            if (!identity) c.status = CheckStatus::Fail;
          });
  s.check(make("ac14.unit_preservation", "multiplicative operators fix the constant 1",
               "T(fg) = T(f) T(g) and T != 0 imply T1 = 1",
               "operators whose unit check disagrees with the expected status <= 0", 0.0),
          [&](CheckResult& c) {
            auto rng = rng_for(opt.seed, 0x1408);
            int wrong = 0;
            for (int t = 0; t < 5; ++t) {
              const UnitCheck a = unit_preservation_check(Operator::composition(random_self_map(rng, 4, n)), 1e-11, n);
              const UnitCheck b = unit_preservation_check(Operator::boundary_eval(std::polar(1.0, 0.5 + t)), 1e-11, n);
              const UnitCheck d = unit_preservation_check(Operator::point_eval(std::polar(0.5, 1.0 + t)), 1e-11, n);
              wrong += (a.status != UnitPreservation::Holds) + (b.status != UnitPreservation::Holds) +
                       (d.status != UnitPreservation::Holds);
            }
            const Series h(std::vector<Complex>{1.0, 1.0});
            const UnitCheck m = unit_preservation_check(Operator::multiplication(h.with_degree(n)), 1e-11, n);
            wrong += m.status != UnitPreservation::PreconditionFailed;
            upper(c, wrong);
            c.detail = "15 multiplicative operators and M_{1+z} (precondition fails)";
          });
  s.check(make("ac14.linearity", "every operator variant is linear",
               "T(a f + b g) = a T f + b T g",
               "max coefficient error relative to max(1, max |coefficient|) <= tolerance", 1e-12, 0.0, true),
          [&](CheckResult& c) {
            auto rng = rng_for(opt.seed, 0x1409);
            double worst = 0.0;
            for (int t = 0; t < 10; ++t) {
              const Operator comp = Operator::composition(random_self_map(rng, 4, n));
              std::vector<Operator> ops{comp, Operator::multiplication(rs(0x14900 + t, 0.6)),
                                        Operator::boundary_eval(std::polar(1.0, 0.3 * t)),
                                        Operator::point_eval(std::polar(0.7, 0.2 * t)), matrix_of(comp, n)};
              const Series f = rs(0x14910 + t), g = rs(0x14920 + t);
              const Complex a = gaussian(rng), b = gaussian(rng);
              for (const Operator& op : ops) {
                worst = std::max(worst, rel_diff(apply(op, scale(f, a) + scale(g, b)),
                                                 scale(apply(op, f), a) + scale(apply(op, g), b)));
              }
            }
            upper(c, worst);
          });
  s.check(make("ac14.sampling_roundtrip", "circle sampling is inverted by the discrete Fourier transform",
               "coeffs_from_samples(sample_circle(f, r, M), r) = f, deg f < M",
               "max coefficient error over 20 series of degree 63 at r in {1, 0.9} <= tolerance", 1e-12),
          [&](CheckResult& c) {
            double worst = 0.0;
            for (int t = 0; t < 20; ++t) {
              const Series f = random_series(derive_seed(opt.seed, 0x14a00 + t), 63, 0.9, 1.0);
              for (double r : {1.0, 0.9}) {
                const auto v = sample_circle(f, r, 64);
                worst = std::max(worst, max_coeff_diff(coeffs_from_samples(v, r), f));
              }
            }
            upper(c, worst);
          });
  s.check(make("ac14.hardy_monotone", "circle means increase with the radius",
               "r1 < r2 implies mean_{r1} |f|^p <= mean_{r2} |f|^p",
               "max over 20 series, p in {1, 2, 4}, 10 radii of mean(r1) - mean(r2) <= tolerance", 1e-12),
          [&](CheckResult& c) {
            double worst = -std::numeric_limits<double>::infinity();
            for (int t = 0; t < 20; ++t) {
              const Series f = rs(0x14b00 + t, 0.8);
              for (double p : {1.0, 2.0, 4.0}) {
                double prev = hardy_circle_mean(f, p, 0.0);
                for (int k = 1; k <= 10; ++k) {
                  const double cur = hardy_circle_mean(f, p, k / 10.0);
                  worst = std::max(worst, prev - cur);
                  prev = cur;
                }
              }
            }
            upper(c, worst);
          });
  s.check(make("ac14.norm_axioms", "sampled norm axioms in every space",
               "||c f|| = |c| ||f||, ||f + g|| <= ||f|| + ||g||",
               "max relative homogeneity error and triangle excess over 10 spaces x 10 pairs <= tolerance", 1e-12),
          [&](CheckResult& c) {
            auto rng = rng_for(opt.seed, 0x140c);
            const SpaceSpec spaces[] = {SpaceSpec::hardy(1.0),     SpaceSpec::hardy(2.0),       SpaceSpec::hardy(4.0),
                                        SpaceSpec::bergman(2, 0),  SpaceSpec::bergman(3, -0.5), SpaceSpec::bloch(),
                                        SpaceSpec::besov(1.0),     SpaceSpec::besov(2.0),       SpaceSpec::besov(3.0),
                                        SpaceSpec::sup()};
            double worst = 0.0;
            for (int t = 0; t < 10; ++t) {
              const Series f = rs(0x14c00 + 2 * t, 0.75), g = rs(0x14c01 + 2 * t, 0.75);
              const Complex a = gaussian(rng);
              for (const SpaceSpec& sp : spaces) {
                const double nf = norm(f, sp).value, ng = norm(g, sp).value;
                const double naf = norm(scale(f, a), sp).value;
                const double nfg = norm(f + g, sp).value;
                worst = std::max({worst, std::abs(naf - std::abs(a) * nf) / (std::abs(a) * nf), (nfg - nf - ng) / (nf + ng)});
              }
            }
            upper(c, worst);
          });
  s.check(make("ac14.besov_multiplier", "polynomial multipliers preserve B_p",
               "int w |(fg)'|^p <= 2^p (int w |f g'|^p + int w |f' g|^p), w = (1-|z|^2)^(p-2)",
               "failures over 20 functions x 3 multipliers x p in {1.5, 2, 3} <= 0", 0.0),
          [&](CheckResult& c) {
            int failures = 0;
            const Series g1(std::vector<Complex>{1.0, 0.0, 1.0});
            for (int t = 0; t < 20; ++t) {
              const Series f = rs(0x14d00 + t, 0.8);
              const Series gs[] = {Series::constant(1.0, 0), g1, random_series(derive_seed(opt.seed, 0x14d80 + t), 6, 0.7, 1.0)};
              for (const Series& g : gs) {
                for (double p : {1.5, 2.0, 3.0}) failures += besov_multiplier_check(f, g, p).holds ? 0 : 1;
              }
            }
            upper(c, failures);
          });
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "skipped";
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Pass; });
}

VerificationReport run_verification(const VerifyOptions& options) {
  if (options.degree < 8 || options.degree > kMaxWorkingDegree) {
    fail(ErrorCode::InvalidArgument, "verify: degree must lie in [8, " + std::to_string(kMaxWorkingDegree) + "]");
  }
  const auto t0 = Clock::now();
  Suite s(options);
  duhamel_monomials(s);
  counterexample(s);
  origin_necessity(s, options);
  classification(s, options);
  bergman_norms(s);
  besov_norms(s);
  hardy_partial_sums(s);
  bloch_polynomials(s);
  bloch_duhamel(s, options);
  beta_asymptotic(s);
  adjoint_evaluation(s, options);
  boundary_functional(s, options);
  growth_bounds(s, options);
  property_suites(s, options);

  VerificationReport rep;
  rep.seed = options.seed;
  rep.degree = options.degree;
  rep.checks = s.take();
  std::stable_sort(rep.checks.begin(), rep.checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  rep.wall_time_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return rep;
}

std::string render_report(const VerificationReport& report, Format format, bool timing) {
  int passed = 0, failed = 0, skipped = 0;
  for (const auto& c : report.checks) {
    passed += c.status == CheckStatus::Pass;
    failed += c.status == CheckStatus::Fail;
    skipped += c.status == CheckStatus::Skipped;
  }
  const std::string policy = "tolerances of degree-sensitive checks are multiplied by max(1, 64 / degree) = " +
                             fmt(std::max(1.0, 64.0 / report.degree));
  if (format == Format::Json) {
    ordered_json meta;
    meta["tool"] = "adisc";
    meta["version"] = "1.0.0";
    meta["seed"] = report.seed;
    meta["working_degree"] = report.degree;
    meta["tolerance_policy"] = policy;
    meta["checks"] = report.checks.size();
    meta["passed"] = passed;
    meta["failed"] = failed;
    meta["skipped"] = skipped;
    meta["all_pass"] = failed == 0 && skipped == 0;
    if (timing) meta["wall_time_ms"] = report.wall_time_ms;
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
      ordered_json j;
      j["id"] = c.id;
      j["title"] = c.title;
      j["anchor"] = c.anchor;
      j["predicate"] = c.predicate;
      j["measured"] = c.measured;
      j["expected"] = c.expected;
      j["tolerance"] = c.tolerance;
      j["degree_sensitive"] = c.degree_sensitive;
      j["status"] = std::string(to_string(c.status));
      j["pass"] = c.status == CheckStatus::Pass;
      j["detail"] = c.detail;
      if (timing) j["wall_time_ms"] = c.wall_time_ms;
      checks.push_back(std::move(j));
    }
    ordered_json doc;
    doc["meta"] = std::move(meta);
    doc["checks"] = std::move(checks);
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "# Verification report\n\n"
     << "seed " << report.seed << ", working degree " << report.degree << ": " << passed << " passed, " << failed
     << " failed, " << skipped << " skipped";
  if (timing) os << " in " << fmt(report.wall_time_ms / 1000.0, 3) << " s";
  os << "\n\n" << policy << "\n\n";
  os << "| id | status | measured | expected | tolerance |" << (timing ? " ms |" : "") << "\n"
     << "|---|---|---|---|---|" << (timing ? "---|" : "") << "\n";
  for (const auto& c : report.checks) {
    os << "| " << c.id << " | " << to_string(c.status) << " | " << fmt(c.measured) << " | " << fmt(c.expected) << " | "
       << fmt(c.tolerance) << " |";
    if (timing) os << " " << fmt(c.wall_time_ms, 4) << " |";
    os << "\n";
  }
  os << "\n";
  for (const auto& c : report.checks) {
    os << "## " << c.id << ": " << c.title << "\n\n"
       << "- anchor: " << c.anchor << "\n"
       << "- predicate: " << c.predicate << "\n"
       << "- status: " << to_string(c.status) << "\n";
    if (!c.detail.empty()) os << "- detail: " << c.detail << "\n";
    os << "\n";
  }
  return os.str();
}

}  // namespace adisc
