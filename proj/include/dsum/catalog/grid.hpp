#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dsum/kernel/big_rational.hpp"

namespace dsum {

/// Inclusive integer interval.
struct IntRange {
  long lo = 0;
  long hi = 0;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Explicit values; kept sorted ascending and free of duplicates.
struct ValueList {
  std::vector<BigRational> values;
  friend bool operator==(const ValueList&, const ValueList&) = default;
};

/// Closed real interval; only usable with random sampling.
struct RealInterval {
  double lo = 0.0;
  double hi = 0.0;
  friend bool operator==(const RealInterval&, const RealInterval&) = default;
};

using Axis = std::variant<IntRange, ValueList, RealInterval>;

ValueList make_value_list(std::vector<BigRational> values);

/// "lo..hi", "v1,v2,..." or "lo..hi" with decimals for a real interval.
std::string axis_str(const Axis& axis);

/// Parses the right-hand side of a "name=spec" override. Integer bounds give
/// an IntRange, decimal bounds a RealInterval, comma lists a ValueList
/// (entries may be "a/b" or decimals). Throws Error(MalformedGrid).
Axis parse_axis(std::string_view spec);

struct Sampling {
  enum class Kind { Exhaustive, Random };
  Kind kind = Kind::Exhaustive;
  std::size_t count = 0;
  std::uint64_t seed = 0;

  static Sampling exhaustive() { return {}; }
  static Sampling random(std::size_t count, std::uint64_t seed) { return {Kind::Random, count, seed}; }
  friend bool operator==(const Sampling&, const Sampling&) = default;
};

struct GridSpec {
  std::vector<std::pair<std::string, Axis>> axes;
  Sampling sampling;

  const Axis* find(std::string_view name) const;
  /// Replaces the axis of that name, or appends it.
  void set(std::string_view name, Axis axis);
  /// Number of points the grid enumerates (count for random sampling).
  std::size_t cardinality() const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// "n=0..10 x=-3..3" plus " random(count, seed)" when sampled.
std::string grid_str(const GridSpec& grid);

}  // namespace dsum
