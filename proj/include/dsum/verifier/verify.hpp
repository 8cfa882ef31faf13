#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dsum/catalog/descriptor.hpp"

namespace dsum {

using GridOverride = std::pair<std::string, Axis>;

/// Default grid of the entry with overrides applied. Every schema parameter
/// must end up with an axis of a fitting kind. Throws Error(MalformedGrid).
GridSpec resolve_grid(const IdentityDescriptor& entry, const std::vector<GridOverride>& overrides = {});

/// Grid points in schema parameter order, lexicographically sorted (first
/// parameter varies slowest). Random sampling is a pure function of the seed.
std::vector<Point> enumerate_points(const IdentityDescriptor& entry, const GridSpec& grid);

/// Exact modes compare canonical forms; trig mode uses |l - r| <= tol (1 + |l|).
bool sides_agree(Mode mode, const Value& lhs, const Value& rhs, double tolerance);

struct VerifyOptions {
  unsigned workers = 1;
  /// Float-trig entries only.
  double tolerance = 1e-9;
  /// Failures kept in the report; failures_total still counts all of them.
  std::size_t max_failures = 100;
};

struct Failure {
  Point point;
  std::string lhs;
  std::string rhs;
  /// Set when an evaluator threw instead of returning.
  std::string error;
  friend bool operator==(const Failure&, const Failure&) = default;
};

struct SkipReason {
  std::string reason;
  std::size_t count = 0;
  friend bool operator==(const SkipReason&, const SkipReason&) = default;
};

struct VerificationReport {
  std::string id;
  Mode mode = Mode::ExactRational;
  std::string grid;
  std::size_t points_checked = 0;
  std::size_t points_skipped = 0;
  /// Schema rules that excluded points, in order of first occurrence.
  std::vector<SkipReason> skipped;
  std::vector<Failure> failures;
  std::size_t failures_total = 0;
  /// Comparison tolerance; zero in exact modes.
  double tolerance = 0.0;
  double wall_time_ms = 0.0;

  bool passed() const { return failures_total == 0; }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Evaluates both sides at every grid point. Failures come out in point
/// order regardless of the worker count.
VerificationReport verify(const IdentityDescriptor& entry, const GridSpec& grid, const VerifyOptions& options = {});
VerificationReport verify(std::string_view id, const std::vector<GridOverride>& overrides = {},
                          const VerifyOptions& options = {});

/// Greedy coordinate-wise reduction toward small values while the point
/// still fails and stays inside the schema.
/// Throws Error(NotACounterexample) if the start point passes.
Point shrink(const IdentityDescriptor& entry, Point failing, double tolerance = 1e-9);

}  // namespace dsum
