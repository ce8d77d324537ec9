#pragma once

// Command drivers and report rendering shared by the C API and the CLI.

#include <cstdint>
#include <string>
#include <string_view>

#include "adisc/series.hpp"
#include "adisc/spaces.hpp"

namespace adisc {

enum class Format { Markdown, Json };

// "md" or "json".
Format parse_format(std::string_view text);

std::string render_norm(const SpaceSpec& space, const NormResult& result, Format format);
std::string render_series(const Series& f, Format format);
std::string render_compose(const ComposeResult& result, Format format);

struct MultCheckOptions {
  std::uint64_t seed = 0;
  int trials = 100;
  int working_degree = kDefaultDegree;
  bool duhamel = false;
  double tol = 1e-11;
  unsigned threads = 1;
};

struct MultCheckOutcome {
  bool pass = false;
  std::string text;
};

// Composition operators under --duhamel are tested on monomial pairs
// (z^i, z^j), i <= j <= min(4, N/2); everything else on seeded random pairs.
MultCheckOutcome check_multiplicative(std::string_view op_text, std::string_view space_text,
                                      const MultCheckOptions& options, Format format);

}  // namespace adisc
