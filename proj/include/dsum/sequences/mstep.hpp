#pragma once

#include <deque>

#include "dsum/kernel/big_rational.hpp"

namespace dsum {

enum class MStepKind { Fibonacci, Lucas };

/// m-step sequence with the m-term recurrence x_n = x_{n-1} + ... + x_{n-m}.
/// Fibonacci seeds: x_1 = 1, x_j = 0 for j = 2−m..0.
/// Lucas seeds: x_0 = m, x_1 = 1, x_j = 0 for j = 2−m..−1.
struct MStepSpec {
  int m = 2;
  MStepKind kind = MStepKind::Fibonacci;

  void validate() const;
  friend bool operator==(const MStepSpec&, const MStepSpec&) = default;
};

/// Throws Error(IndexOutOfRange) for n < 2 − m.
BigInt mstep(const MStepSpec& spec, long n);

/// Sliding-window table starting at the lowest seed index.
class MStepSequence {
 public:
  explicit MStepSequence(MStepSpec spec);
  const MStepSpec& spec() const { return spec_; }
  long first_index() const { return 2 - spec_.m; }
  const BigInt& at(long n);

 private:
  MStepSpec spec_;
  std::deque<BigInt> table_;  // table_[i] holds x_{first_index() + i}
};

}  // namespace dsum
