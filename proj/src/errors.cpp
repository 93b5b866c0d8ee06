#include "eigenop/errors.hpp"

namespace eigenop {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::truncation: return "truncation";
    case ErrorCode::budget: return "budget";
    case ErrorCode::numeric: return "numeric";
  }
  return "unknown";
}

}  // namespace eigenop
