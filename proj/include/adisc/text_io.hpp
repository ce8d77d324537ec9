#pragma once

// Text formats shared by the CLI, the C API and reports.
//
// Series JSON: [[re, im], ...] with index = power of z; plain numbers read as reals.
// Shorthand:   "z^7", "0.5z", "0.5*z + 0.1*z^3", "(0.3,-0.2)*z^2 - 1", "2".
// Operators:   "comp:<series>", "mult:<series>", "bdry-eval:c=re,im",
//              "point-eval:a=re,im", "matrix:<file>".
// A <series> is inline text or the path of a file holding it.

#include <string>
#include <string_view>

#include "adisc/operators.hpp"
#include "adisc/series.hpp"

namespace adisc {

Series parse_series_json(std::string_view text);
Series parse_series_shorthand(std::string_view text);

// JSON when the text starts with '[', shorthand otherwise; a file path is
// read first. The result is padded to at least working_degree.
Series parse_series(std::string_view text, int working_degree = kDefaultDegree);

// trim = true drops trailing zero coefficients (keeping at least a_0).
std::string series_to_json(const Series& f, bool trim = false);

// "re,im" or "re".
Complex parse_complex(std::string_view text);

// Matrix files: JSON array of rows, entries [re, im] or plain numbers.
Operator parse_operator(std::string_view text, int working_degree = kDefaultDegree);

}  // namespace adisc
