#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dsum {

enum class ErrorCode {
  DivisionByZero,
  NotInvertible,
  InvalidModulus,
  UseGeneralized,
  InvalidLowerIndex,
  InvalidShift,
  IndexOutOfRange,
  InvalidSpec,
  Domain,
  NotFound,
  NotACounterexample,
  NotBenchmarkable,
  MalformedGrid,
  Internal,
};

/// Stable kebab-case name of an error code, e.g. "division-by-zero".
std::string_view to_string(ErrorCode code) noexcept;

/// Every recoverable failure in the library is reported as an Error carrying
/// a machine-checkable code; what() is "<code>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace dsum
