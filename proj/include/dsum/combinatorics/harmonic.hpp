#pragma once

#include "dsum/kernel/big_rational.hpp"

namespace dsum {

enum class HarmonicKind { Plain, Odd };

/// H_n^(m) = Σ_{j=1}^n 1/j^m, or O_n^(m) = Σ_{j=1}^n 1/(2j−1)^m.
struct HarmonicValue {
  BigRational value;
  long n = 0;
  long order = 1;
  HarmonicKind kind = HarmonicKind::Plain;
};

/// Exact partial sum; prefixes are memoized per thread. Throws Error(Domain)
/// for n < 0 or order < 1.
BigRational harmonic(long n, long order = 1, HarmonicKind kind = HarmonicKind::Plain);

HarmonicValue harmonic_value(long n, long order, HarmonicKind kind);

}  // namespace dsum
