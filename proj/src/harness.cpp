#include "adisc/harness.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "adisc/duhamel.hpp"
#include "adisc/error.hpp"
#include "adisc/operators.hpp"
#include "adisc/text_io.hpp"

namespace adisc {
namespace {

constexpr int kNormProbes = 20;

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// shortest text that reads back as the same double
std::string num(double x) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string monomial_name(int k) {
  if (k == 0) return "1";
  if (k == 1) return "z";
  return "z^" + std::to_string(k);
}

std::string_view kind_name(SelfMapKind k) {
  switch (k) {
    case SelfMapKind::SelfMap: return "self-map";
    case SelfMapKind::UnimodularConstant: return "unimodular-constant";
    case SelfMapKind::Neither: return "neither";
  }
  return "neither";
}

ordered_json series_json(const Series& f) { return ordered_json::parse(series_to_json(f, true)); }

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "md" || text == "markdown") return Format::Markdown;
  if (text == "json") return Format::Json;
  fail(ErrorCode::Parse, "unknown format '" + std::string(text) + "' (expected md or json)");
}

std::string render_norm(const SpaceSpec& space, const NormResult& result, Format format) {
  if (format == Format::Json) {
    ordered_json j;
    j["space"] = space.to_string();
    j["value"] = result.value;
    j["method"] = std::string(to_string(result.method));
    j["error_estimate"] = result.error_estimate;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "norm " << space.to_string() << " = " << num(result.value) << "\n"
     << "method: " << to_string(result.method) << "\n"
     << "error estimate: " << num(result.error_estimate) << "\n";
  return os.str();
}

std::string render_series(const Series& f, Format format) {
  if (format == Format::Json) {
    ordered_json j;
    j["degree"] = f.effective_degree();
    j["coefficients"] = series_json(f);
    return j.dump(2) + "\n";
  }
  return series_to_json(f, true) + "\n";
}

std::string render_compose(const ComposeResult& result, Format format) {
  const char* path = result.path == ComposePath::Triangular ? "triangular" : "resampling";
  if (format == Format::Json) {
    ordered_json j;
    j["path"] = path;
    j["error_estimate"] = result.error_estimate;
    j["coefficients"] = series_json(result.series);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << series_to_json(result.series, true) << "\n"
     << "path: " << path << "\n"
     << "error estimate: " << num(result.error_estimate) << "\n";
  return os.str();
}

MultCheckOutcome check_multiplicative(std::string_view op_text, std::string_view space_text,
                                      const MultCheckOptions& options, Format format) {
  if (options.trials < 1) fail(ErrorCode::InvalidArgument, "trials must be positive");
  if (!(options.tol > 0.0)) fail(ErrorCode::InvalidArgument, "tolerance must be positive");
  const SpaceSpec space = SpaceSpec::parse(space_text);
  const Operator op = parse_operator(op_text, options.working_degree);
  int n = options.working_degree;
  if (const auto* m = std::get_if<MatrixOperator>(&op.variant())) n = m->dim - 1;
  if (n < 2) fail(ErrorCode::InvalidArgument, "working degree must be at least 2");

  const SelfMapStatus symbol = is_self_map(symbol_of(op, n));
  std::vector<std::string> warnings;
  if (symbol.kind == SelfMapKind::UnimodularConstant) {
    warnings.push_back("symbol unimodular: not a composition operator");
  } else if (symbol.kind == SelfMapKind::Neither) {
    warnings.push_back("symbol is not a self-map: not a composition operator");
  }

  ordered_json j;
  j["operator"] = op.describe();
  j["space"] = space.to_string();
  j["product"] = options.duhamel ? "duhamel" : "pointwise";
  j["working_degree"] = n;

  double max_residual = 0.0;
  std::string witness_text;
  const auto* comp = std::get_if<Composition>(&op.variant());
  if (options.duhamel && comp) {
    const int basis = std::min(4, comp->symbol.degree() / 2);
    const DuhamelResidual r = duhamel_residual(comp->symbol, space, basis, options.tol);
    const DuhamelClassification cls = classify_duhamel_multiplicative(comp->symbol);
    max_residual = r.max_residual;
    j["mode"] = "monomial-pairs";
    j["basis_degree"] = basis;
    j["max_residual"] = r.max_residual;
    j["witness"] = {{"f", monomial_name(r.witness_i)}, {"g", monomial_name(r.witness_j)}};
    j["classifier"] = {{"multiplicative", cls.multiplicative}, {"explanation", cls.explanation}};
    witness_text = "(" + monomial_name(r.witness_i) + ", " + monomial_name(r.witness_j) + ")";
  } else {
    ResidualOptions ro;
    ro.trials = options.trials;
    ro.seed = options.seed;
    ro.working_degree = n;
    ro.degree_budget = n / 2;
    ro.product = options.duhamel ? Product::Duhamel : Product::Pointwise;
    ro.threads = options.threads;
    const MultiplicativityReport rep = almost_mult_residual(op, space, ro);
    max_residual = rep.max_residual;
    j["mode"] = "random-pairs";
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    j["degree_budget"] = rep.degree_budget;
    j["max_residual"] = rep.max_residual;
    j["mean_residual"] = rep.mean_residual;
    j["witness"] = {{"trial", rep.witness_trial}, {"f", series_json(rep.witness_f)}, {"g", series_json(rep.witness_g)}};
    witness_text = "trial " + std::to_string(rep.witness_trial) + " (seed " + std::to_string(options.seed) + ")";
  }
  const bool pass = max_residual < options.tol;
  j["tolerance"] = options.tol;
  j["verdict"] = pass ? "PASS" : "FAIL";
  j["symbol"] = {{"kind", std::string(kind_name(symbol.kind))},
                 {"boundary_max", symbol.boundary_max},
                 {"constant", symbol.constant},
                 {"boundary_contact", symbol.boundary_contact}};
  double unit_defect = -1.0;
  if (pass && !options.duhamel) {
    unit_defect = norm(sub(apply(op, Series::constant(1.0, n)), Series::constant(1.0, n)), SpaceSpec::sup()).value;
    j["unit_defect"] = unit_defect;
  }
  const NormLowerBound lower = operator_norm_lower_bound(op, space, kNormProbes, options.seed, n);
  j["operator_norm_lower_bound"] = {{"value", lower.value}, {"witness", lower.witness}};
  j["warnings"] = warnings;

  MultCheckOutcome out;
  out.pass = pass;
  if (format == Format::Json) {
    out.text = j.dump(2) + "\n";
    return out;
  }
  std::ostringstream os;
  os << (pass ? "PASS" : "FAIL") << ": " << op.describe() << "\n"
     << "product: " << (options.duhamel ? "duhamel" : "pointwise") << ", space " << space.to_string() << "\n"
     << "max residual: " << num(max_residual) << " (tolerance " << num(options.tol) << ")\n";
  if (j.contains("mean_residual")) os << "mean residual: " << num(j["mean_residual"].get<double>()) << " over " << options.trials << " trials\n";
  os << "witness pair: " << witness_text << "\n";
  if (j.contains("classifier")) os << "classifier: " << j["classifier"]["explanation"].get<std::string>() << "\n";
  os << "symbol: " << symbol.describe() << "\n";
  os << "||T|| >= " << num(lower.value) << " (witness " << lower.witness << ")\n";
  if (unit_defect >= 0.0) os << "unit defect ||T1 - 1||_sup: " << num(unit_defect) << "\n";
  for (const auto& w : warnings) os << "warning: " << w << "\n";
  out.text = os.str();
  return out;
}

}  // namespace adisc
