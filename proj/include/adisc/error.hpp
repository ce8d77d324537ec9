#pragma once

#include <stdexcept>
#include <string>

namespace adisc {

// Numeric values are shared with the C API status codes (adisc.h).
enum class ErrorCode {
  InvalidArgument = 1,
  Parse = 2,
  Domain = 3,
  NotSelfMap = 4,
  Quadrature = 5,
  Io = 6,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace adisc
