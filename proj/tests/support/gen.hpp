#pragma once

// Small deterministic generators for the property tests.

#include <cstdint>

#include "dsum/kernel/big_rational.hpp"
#include "dsum/kernel/qsurd.hpp"

namespace dsum::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi].
  long integer(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

  /// num/den with |num| <= bound and 1 <= den <= bound.
  BigRational rational(long bound = 20) { return BigRational(integer(-bound, bound)) / BigRational(integer(1, bound)); }

  BigRational nonzero_rational(long bound = 20) {
    BigRational r = rational(bound);
    while (r.is_zero()) r = rational(bound);
    return r;
  }

  QSurd surd(long bound = 20) { return QSurd(rational(bound), rational(bound)); }

  QSurd nonzero_surd(long bound = 20) {
    QSurd z = surd(bound);
    while (z.is_zero()) z = surd(bound);
    return z;
  }

 private:
  std::uint64_t state_;
};

}  // namespace dsum::testing
