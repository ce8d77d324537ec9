#include "adisc/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "adisc/error.hpp"

namespace adisc {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Inline text, or the contents of the file it names.
std::string resolve(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.empty()) fail(ErrorCode::Parse, "empty series text");
  if (t.front() != '[') {
    std::error_code ec;
    const std::filesystem::path path{std::string(t)};
    if (std::filesystem::is_regular_file(path, ec)) return read_file(path);
  }
  return std::string(t);
}

Complex json_scalar(const json& v, std::string_view where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && (v.size() == 1 || v.size() == 2) && v[0].is_number() && (v.size() == 1 || v[1].is_number())) {
    return {v[0].get<double>(), v.size() == 2 ? v[1].get<double>() : 0.0};
  }
  fail(ErrorCode::Parse, std::string(where) + ": expected a number or an [re, im] pair, got " + v.dump());
}

class ShorthandParser {
public:
  explicit ShorthandParser(std::string_view s) : s_(s) {}

  Series parse() {
    skip_ws();
    if (at_end()) error("empty expression");
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      double sign = 1.0;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1.0 : 1.0;
        skip_ws();
      } else if (!first) {
        error("expected '+' or '-'");
      }
      term(sign);
      first = false;
    }
    const int degree = terms_.empty() ? 0 : std::max_element(terms_.begin(), terms_.end(), [](auto& a, auto& b) {
                                                return a.first < b.first;
                                              })->first;
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (const auto& [k, v] : terms_) c[static_cast<std::size_t>(k)] += v;
    return Series(std::move(c));
  }

private:
  void term(double sign) {
    Complex coef = 1.0;
    bool have_coef = false;
    if (peek() == '(') {
      get();
      skip_ws();
      const double re = number();
      double im = 0.0;
      skip_ws();
      if (peek() == ',') {
        get();
        skip_ws();
        im = number();
        skip_ws();
      }
      expect(')');
      coef = {re, im};
      have_coef = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      const double x = number();
      if (peek() == 'i') {
        get();
        coef = {0.0, x};
      } else {
        coef = x;
      }
      have_coef = true;
    }
    skip_ws();
    if (peek() == '*') {
      if (!have_coef) error("'*' without a coefficient");
      get();
      skip_ws();
      if (peek() != 'z') error("expected 'z' after '*'");
    }
    int power = 0;
    if (peek() == 'z') {
      get();
      power = 1;
      skip_ws();
      if (peek() == '^') {
        get();
        skip_ws();
        power = integer();
      }
    } else if (!have_coef) {
      error("expected a coefficient or 'z'");
    }
    terms_.emplace_back(power, sign * coef);
  }

  double number() {
    double x = 0.0;
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    auto [ptr, ec] = std::from_chars(begin, end, x);
    if (ec != std::errc{} || !std::isfinite(x)) error("malformed number");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return x;
  }

  int integer() {
    int k = 0;
    const char* begin = s_.data() + pos_;
    auto [ptr, ec] = std::from_chars(begin, s_.data() + s_.size(), k);
    if (ec != std::errc{} || k < 0) error("malformed exponent");
    if (k > kMaxWorkingDegree) error("exponent exceeds " + std::to_string(kMaxWorkingDegree));
    pos_ += static_cast<std::size_t>(ptr - begin);
    return k;
  }

  void expect(char c) {
    if (peek() != c) error(std::string("expected '") + c + "'");
    get();
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::Parse, "series shorthand '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<std::pair<int, Complex>> terms_;
};

std::string_view strip_key(std::string_view text, std::string_view key) {
  text = trim(text);
  if (text.substr(0, key.size()) == key) text.remove_prefix(key.size());
  return text;
}

}  // namespace

Series parse_series_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("series JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.empty()) fail(ErrorCode::Parse, "series JSON: expected a non-empty array");
  if (doc.size() > static_cast<std::size_t>(kMaxWorkingDegree) + 1) {
    fail(ErrorCode::Parse, "series JSON: more than " + std::to_string(kMaxWorkingDegree + 1) + " coefficients");
  }
  std::vector<Complex> c;
  c.reserve(doc.size());
  for (std::size_t k = 0; k < doc.size(); ++k) c.push_back(json_scalar(doc[k], "coefficient " + std::to_string(k)));
  try {
    return Series(std::move(c));
  } catch (const Error& e) {
    fail(ErrorCode::Parse, e.what());
  }
}

Series parse_series_shorthand(std::string_view text) { return ShorthandParser(text).parse(); }

Series parse_series(std::string_view text, int working_degree) {
  if (working_degree < 0 || working_degree > kMaxWorkingDegree) {
    fail(ErrorCode::InvalidArgument, "working degree must lie in [0, " + std::to_string(kMaxWorkingDegree) + "]");
  }
  const std::string body = resolve(text);
  const std::string_view t = trim(body);
  const Series f = (!t.empty() && t.front() == '[') ? parse_series_json(t) : parse_series_shorthand(t);
  return f.degree() < working_degree ? f.with_degree(working_degree) : f;
}

std::string series_to_json(const Series& f, bool trim_zeros) {
  const int last = trim_zeros ? f.effective_degree() : f.degree();
  json arr = json::array();
  for (int k = 0; k <= last; ++k) arr.push_back({f[k].real(), f[k].imag()});
  return arr.dump();
}

Complex parse_complex(std::string_view text) {
  text = trim(text);
  const auto comma = text.find(',');
  auto num = [&](std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double x = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(x)) {
      fail(ErrorCode::Parse, "malformed complex literal '" + std::string(text) + "'");
    }
    return x;
  };
  if (comma == std::string_view::npos) return {num(text), 0.0};
  return {num(text.substr(0, comma)), num(text.substr(comma + 1))};
}

Operator parse_operator(std::string_view text, int working_degree) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) fail(ErrorCode::Parse, "operator '" + std::string(text) + "': expected kind:argument");
  const std::string_view kind = text.substr(0, colon);
  const std::string_view arg = text.substr(colon + 1);
  if (kind == "comp") return Operator::composition(parse_series(arg, working_degree));
  if (kind == "mult") return Operator::multiplication(parse_series(arg, working_degree));
  if (kind == "bdry-eval") return Operator::boundary_eval(parse_complex(strip_key(arg, "c=")));
  if (kind == "point-eval") return Operator::point_eval(parse_complex(strip_key(arg, "a=")));
  if (kind == "matrix") {
    const std::string body = resolve(arg);
    json doc;
    try {
      doc = json::parse(body);
    } catch (const json::exception& e) {
      fail(ErrorCode::Parse, std::string("matrix JSON: ") + e.what());
    }
    if (!doc.is_array() || doc.empty()) fail(ErrorCode::Parse, "matrix JSON: expected a non-empty array of rows");
    const int dim = static_cast<int>(doc.size());
    std::vector<Complex> entries(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
    for (int r = 0; r < dim; ++r) {
      const json& row = doc[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<int>(row.size()) != dim) {
        fail(ErrorCode::Parse, "matrix JSON: row " + std::to_string(r) + " must have " + std::to_string(dim) + " entries");
      }
      for (int c = 0; c < dim; ++c) {
        entries[static_cast<std::size_t>(c) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(r)] =
            json_scalar(row[static_cast<std::size_t>(c)], "matrix entry");
      }
    }
    return Operator::matrix(dim, std::move(entries));
  }
  fail(ErrorCode::Parse, "unknown operator kind '" + std::string(kind) + "'");
}

}  // namespace adisc
