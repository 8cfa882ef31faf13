#include "dsum/error.hpp"

namespace dsum {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::NotInvertible: return "not-invertible";
    case ErrorCode::InvalidModulus: return "invalid-modulus";
    case ErrorCode::UseGeneralized: return "use-generalized";
    case ErrorCode::InvalidLowerIndex: return "invalid-lower-index";
    case ErrorCode::InvalidShift: return "invalid-shift";
    case ErrorCode::IndexOutOfRange: return "index-out-of-range";
    case ErrorCode::InvalidSpec: return "invalid-spec";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::NotFound: return "not-found";
    case ErrorCode::NotACounterexample: return "not-a-counterexample";
    case ErrorCode::NotBenchmarkable: return "not-benchmarkable";
    case ErrorCode::MalformedGrid: return "malformed-grid";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)),
      code_(code),
      detail_(detail) {}

}  // namespace dsum
