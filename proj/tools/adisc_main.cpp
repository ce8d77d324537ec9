// adisc command-line tool. Talks to the library only through adisc.h.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "adisc/adisc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInternal = 3;

struct Globals {
  uint64_t seed = 0;
  int degree = 64;
  double tol = 1e-11;
  std::string out;
  std::string format = "md";
};

struct Failure {
  adisc_status status;
};

struct SeriesDeleter {
  void operator()(adisc_series* f) const { adisc_series_free(f); }
};
using SeriesPtr = std::unique_ptr<adisc_series, SeriesDeleter>;

struct StringDeleter {
  void operator()(char* s) const { adisc_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

void check(adisc_status st) {
  if (st != ADISC_OK) throw Failure{st};
}

SeriesPtr parse(const std::string& text, int degree) {
  adisc_series* f = nullptr;
  check(adisc_series_parse(text.c_str(), degree, &f));
  return SeriesPtr(f);
}

std::string to_json(const adisc_series* f) {
  char* s = nullptr;
  check(adisc_series_to_json(f, 1, &s));
  return OwnedString(s).get();
}

adisc_format format_of(const Globals& g) { return g.format == "json" ? ADISC_FORMAT_JSON : ADISC_FORMAT_MD; }

std::string number(double x) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << g.out << "\n";
    throw Failure{ADISC_ERR_IO};
  }
  f << text;
}

int run_norm(const Globals& g, const std::string& series, const std::string& space) {
  const SeriesPtr f = parse(series, g.degree);
  double value = 0.0, err = 0.0;
  const char* method = nullptr;
  check(adisc_norm(f.get(), space.c_str(), &value, &err, &method));
  if (g.format == "json") {
    emit(g, "{\n  \"space\": " + json_string(space) + ",\n  \"value\": " + number(value) + ",\n  \"method\": " +
                json_string(method) + ",\n  \"error_estimate\": " + number(err) + "\n}\n");
  } else {
    emit(g, "norm " + space + " = " + number(value) + "\nmethod: " + method + "\nerror estimate: " + number(err) + "\n");
  }
  return kExitOk;
}

int run_duhamel(const Globals& g, const std::string& fs, const std::string& gs) {
  const SeriesPtr f = parse(fs, g.degree);
  const SeriesPtr h = parse(gs, g.degree);
  adisc_series* p = nullptr;
  check(adisc_duhamel(f.get(), h.get(), &p));
  const SeriesPtr prod(p);
  const std::string coeffs = to_json(prod.get());
  emit(g, g.format == "json" ? "{\n  \"coefficients\": " + coeffs + "\n}\n" : coeffs + "\n");
  return kExitOk;
}

int run_compose(const Globals& g, const std::string& fs, const std::string& phis) {
  const SeriesPtr f = parse(fs, g.degree);
  const SeriesPtr phi = parse(phis, g.degree);
  adisc_series* c = nullptr;
  double err = 0.0;
  int path = 0;
  check(adisc_compose(f.get(), phi.get(), &c, &err, &path));
  const SeriesPtr comp(c);
  const std::string coeffs = to_json(comp.get());
  const char* path_name = path == 0 ? "triangular" : "resampling";
  if (g.format == "json") {
    emit(g, "{\n  \"path\": " + json_string(path_name) + ",\n  \"error_estimate\": " + number(err) +
                ",\n  \"coefficients\": " + coeffs + "\n}\n");
  } else {
    emit(g, coeffs + "\npath: " + path_name + "\nerror estimate: " + number(err) + "\n");
  }
  return kExitOk;
}

int run_check(const Globals& g, const std::string& op, const std::string& space, bool duhamel, int trials,
              unsigned threads) {
  adisc_mult_options o;
  adisc_mult_options_init(&o);
  o.seed = g.seed;
  o.trials = trials;
  o.working_degree = g.degree;
  o.duhamel = duhamel ? 1 : 0;
  o.tol = g.tol;
  o.threads = threads;
  int pass = 0;
  char* report = nullptr;
  check(adisc_check_multiplicative(op.c_str(), space.c_str(), &o, format_of(g), &pass, &report));
  emit(g, OwnedString(report).get());
  return pass ? kExitOk : kExitCheckFailed;
}

int run_verify(const Globals& g, const std::string& only, unsigned threads, bool no_timing) {
  adisc_verify_options o;
  adisc_verify_options_init(&o);
  o.seed = g.seed;
  o.degree = g.degree;
  o.threads = threads;
  o.only = only.empty() ? nullptr : only.c_str();
  o.timing = no_timing ? 0 : 1;
  int all_pass = 0;
  char* report = nullptr;
  check(adisc_verify(&o, format_of(g), &all_pass, &report));
  emit(g, OwnedString(report).get());
  return all_pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adisc: analytic functions on the unit disc, Duhamel products and multiplicativity checks"};
  app.set_version_flag("--version", std::string(adisc_version()));
  app.require_subcommand(1);

  Globals g;
  app.add_option("--seed", g.seed, "Seed for every random sample")->capture_default_str();
  app.add_option("--degree", g.degree, "Working truncation degree")->capture_default_str()->check(CLI::Range(0, 1024));
  app.add_option("--tol", g.tol, "Residual tolerance for check-multiplicative")->capture_default_str();
  app.add_option("--out", g.out, "Write the output to this file instead of stdout");
  app.add_option("--format", g.format, "Output format")->capture_default_str()->check(CLI::IsMember({"md", "json"}));

  std::string series, space, fs, gs, phis, op, only;
  bool duhamel = false, no_timing = false;
  int trials = 100;
  unsigned threads = 1;

  auto* norm = app.add_subcommand("norm", "Norm of a series in a function space")->fallthrough();
  norm->add_option("--series", series, "Series: JSON, shorthand such as 0.5z+z^3, or a file")->required();
  norm->add_option("--space", space, "hardy:p=2, bergman:p=2,a=0, bloch, little-bloch, besov:p=2, sup")->required();

  auto* duh = app.add_subcommand("duhamel", "Duhamel product f * g")->fallthrough();
  duh->add_option("--f", fs, "First factor")->required();
  duh->add_option("--g", gs, "Second factor")->required();

  auto* comp = app.add_subcommand("compose", "Taylor coefficients of f(phi(z))")->fallthrough();
  comp->add_option("--f", fs, "Outer series")->required();
  comp->add_option("--phi", phis, "Inner series")->required();

  auto* mult = app.add_subcommand("check-multiplicative", "Multiplicativity residual of an operator")->fallthrough();
  mult->add_option("--op", op, "comp:<series>, mult:<series>, bdry-eval:c=re,im, point-eval:a=re,im, matrix:<file>")
      ->required();
  mult->add_option("--space", space, "Norm used for residuals")->default_str("hardy:p=2");
  mult->add_flag("--duhamel", duhamel, "Test the Duhamel product instead of the pointwise product");
  mult->add_option("--trials", trials, "Random pairs")->capture_default_str();
  mult->add_option("--threads", threads, "Worker threads, 0 = all cores")->capture_default_str();

  auto* ver = app.add_subcommand("verify", "Run the verification suite")->fallthrough();
  ver->add_option("--only", only, "Run checks whose id starts with this prefix");
  ver->add_option("--threads", threads, "Worker threads for parallel checks")->capture_default_str();
  ver->add_flag("--no-timing", no_timing, "Omit wall-time fields");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }
  if (space.empty()) space = "hardy:p=2";

  try {
    if (*norm) return run_norm(g, series, space);
    if (*duh) return run_duhamel(g, fs, gs);
    if (*comp) return run_compose(g, fs, phis);
    if (*mult) return run_check(g, op, space, duhamel, trials, threads);
    if (*ver) return run_verify(g, only, threads, no_timing);
  } catch (const Failure& f) {
    std::cerr << "error: " << adisc_status_name(f.status);
    if (*adisc_last_error()) std::cerr << ": " << adisc_last_error();
    std::cerr << "\n";
    return f.status == ADISC_ERR_INTERNAL ? kExitInternal : kExitInvalid;
  }
  return kExitInvalid;
}
