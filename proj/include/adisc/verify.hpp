#pragma once

// The verification suite: every claim becomes a named check with a measured
// value, an expected value and a tolerance. Check ids are stable.

#include <cstdint>
#include <string>
#include <vector>

#include "adisc/harness.hpp"
#include "adisc/series.hpp"

namespace adisc {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus status);

struct CheckResult {
  std::string id;         // "ac05.bergman_quadrature"
  std::string title;
  std::string anchor;     // the identity or bound being exercised
  std::string predicate;  // how measured / expected / tolerance combine
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool degree_sensitive = false;  // tolerance scaled by max(1, 64 / degree)
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
  double wall_time_ms = 0.0;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  int degree = kDefaultDegree;  // 8 <= degree <= 1024
  unsigned threads = 1;
  std::string only;  // run checks whose id starts with this prefix; empty = all
};

struct VerificationReport {
  std::uint64_t seed = 0;
  int degree = kDefaultDegree;
  std::vector<CheckResult> checks;  // ordered by id
  double wall_time_ms = 0.0;

  bool all_pass() const;
};

VerificationReport run_verification(const VerifyOptions& options);

// JSON {meta, checks[]}; with timing = false the wall_time fields are
// omitted so two runs compare byte for byte.
std::string render_report(const VerificationReport& report, Format format, bool timing = true);

}  // namespace adisc
