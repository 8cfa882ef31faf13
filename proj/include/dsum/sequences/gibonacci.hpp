#pragma once

#include <utility>

#include "dsum/kernel/big_rational.hpp"
#include "dsum/kernel/qsurd.hpp"
#include "dsum/sequences/linear_memo.hpp"

namespace dsum {

/// Seeds of G_k = G_{k-1} + G_{k-2}; not both zero.
struct GibonacciSpec {
  BigRational g0;
  BigRational g1;

  /// Throws Error(InvalidSpec) when both seeds vanish.
  void validate() const;
  friend bool operator==(const GibonacciSpec&, const GibonacciSpec&) = default;
};

/// G_n for any integer n; negative indices by G_{k-2} = G_k − G_{k-1}.
BigRational gibonacci(const GibonacciSpec& spec, long n);

/// A = (G1 − G0β)/(α − β), B = (G0α − G1)/(α − β), so G_n = Aα^n + Bβ^n.
std::pair<QSurd, QSurd> gibonacci_binet_weights(const GibonacciSpec& spec);

/// Memoized evaluator for repeated queries against one spec.
class GibonacciSequence {
 public:
  explicit GibonacciSequence(GibonacciSpec spec);
  const GibonacciSpec& spec() const { return spec_; }
  const BigRational& at(long n) { return memo_.at(n); }

 private:
  GibonacciSpec spec_;
  LinearMemo<BigRational> memo_;
};

}  // namespace dsum
