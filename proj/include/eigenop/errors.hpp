#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eigenop {

/// Machine-readable reason attached to every library error.
enum class ErrorCode {
  invalid_argument,  // malformed input: lambda = 0, zero symbol, bad seminorm parameter
  precondition,      // operation not defined for this operator (e.g. m = 0 for S_k)
  truncation,        // result needs coefficients beyond the truncation budget
  budget,            // a search or combinatorial sum exceeded its configured cap
  numeric,           // a coefficient overflowed to Inf/NaN
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eigenop
