#pragma once

#include "dsum/kernel/big_rational.hpp"

namespace dsum {

/// F_n for any integer n, by fast doubling; F_{-n} = (-1)^{n-1} F_n.
BigInt fib(long n);
/// L_n for any integer n; L_{-n} = (-1)^n L_n.
BigInt lucas(long n);

/// Step-by-step recurrence, forwards or backwards. Cross-check only.
BigInt fib_naive(long n);
BigInt lucas_naive(long n);

}  // namespace dsum
