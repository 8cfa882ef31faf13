#pragma once

#include "dsum/kernel/big_rational.hpp"

namespace dsum {

/// C(n, k) for n >= 0: zero when k < 0 or k > n.
/// Throws Error(UseGeneralized) for n < 0.
BigInt binom(long n, long k);

/// x(x−1)…(x−k+1)/k! for rational x. Throws Error(InvalidLowerIndex) for k < 0.
BigRational gen_binom(const BigRational& x, long k);

/// n!; throws Error(Domain) for n < 0.
BigInt factorial(long n);

}  // namespace dsum
