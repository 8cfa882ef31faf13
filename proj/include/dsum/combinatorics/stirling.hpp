#pragma once

#include <vector>

#include "dsum/kernel/big_rational.hpp"

namespace dsum {

/// {n, k}: zero outside 0 <= k <= n except {0, 0} = 1. Throws Error(Domain) for n < 0.
BigInt stirling2(long n, long k);

/// r-Stirling number {N, K}_r where N = n + r and K = k + r.
/// Throws Error(InvalidShift) when N < r, K < r or r < 0.
BigInt rstirling2(long n_shifted, long k_shifted, long r);

/// Dense table of {n + r, k + r}_r for 0 <= n <= max_n, 0 <= k <= max_k.
/// Built from the recurrence and checked entry by entry against the
/// alternating sum Σ_p (−1)^{k−p} C(k,p)(r+p)^n / k!; a mismatch throws
/// Error(Internal).
class StirlingTable {
 public:
  StirlingTable(long max_n, long max_k, long r);

  long max_n() const { return max_n_; }
  long max_k() const { return max_k_; }
  long r_shift() const { return r_; }
  /// Underlying (unshifted) indices.
  const BigInt& at(long n, long k) const;

 private:
  long max_n_;
  long max_k_;
  long r_;
  std::vector<std::vector<BigInt>> rows_;
};

/// Alternating-sum evaluation of {n + r, k + r}_r (unshifted n, k >= 0).
BigInt rstirling_alternating(long n, long k, long r);

}  // namespace dsum
