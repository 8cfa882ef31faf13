#include "dsum/sequences/fibonacci.hpp"

#include <utility>

namespace dsum {

namespace {

// (F_n, F_{n+1}) for n >= 0.
std::pair<BigInt, BigInt> fib_pair(unsigned long n) {
  BigInt a = 0;  // F_k
  BigInt b = 1;  // F_{k+1}
  int top = 0;
  while (top < 63 && (n >> (top + 1)) != 0) ++top;
  for (int bit = top; bit >= 0 && n != 0; --bit) {
    // F_{2k} = F_k (2F_{k+1} - F_k), F_{2k+1} = F_k^2 + F_{k+1}^2
    BigInt c = a * (2 * b - a);
    BigInt d = a * a + b * b;
    if ((n >> bit) & 1UL) {
      a = d;
      b = c + d;
    } else {
      a = std::move(c);
      b = std::move(d);
    }
  }
  return {a, b};
}

bool odd(long n) { return (n & 1L) != 0; }

}  // namespace

BigInt fib(long n) {
  if (n >= 0) return fib_pair(static_cast<unsigned long>(n)).first;
  BigInt v = fib_pair(static_cast<unsigned long>(-n)).first;
  return odd(n) ? v : BigInt(-v);
}

BigInt lucas(long n) {
  const unsigned long a = static_cast<unsigned long>(n >= 0 ? n : -n);
  auto [f, f1] = fib_pair(a);
  BigInt v = 2 * f1 - f;  // L_k = F_{k-1} + F_{k+1} = 2F_{k+1} - F_k
  return (n < 0 && odd(n)) ? BigInt(-v) : v;
}

namespace {

BigInt naive(long n, BigInt x0, BigInt x1) {
  if (n >= 0) {
    for (long i = 0; i < n; ++i) {
      BigInt next = x0 + x1;
      x0 = std::move(x1);
      x1 = std::move(next);
    }
    return x0;
  }
  for (long i = 0; i > n; --i) {
    BigInt prev = x1 - x0;
    x1 = std::move(x0);
    x0 = std::move(prev);
  }
  return x0;
}

}  // namespace

BigInt fib_naive(long n) { return naive(n, 0, 1); }
BigInt lucas_naive(long n) { return naive(n, 2, 1); }

}  // namespace dsum
