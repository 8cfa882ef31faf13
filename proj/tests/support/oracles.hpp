#pragma once

// Reference values computed without the library: GMP's own sequence
// routines, Pascal's triangle, brute-force set partitions, plain loops.

#include <gmpxx.h>

#include <functional>
#include <vector>

namespace dsum::testing {

inline mpz_class fib_oracle(long n) {
  mpz_class f;
  mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? -n : n));
  if (n < 0 && (-n) % 2 == 0) f = -f;
  return f;
}

inline mpz_class lucas_oracle(long n) {
  mpz_class l;
  mpz_lucnum_ui(l.get_mpz_t(), static_cast<unsigned long>(n < 0 ? -n : n));
  if (n < 0 && (-n) % 2 == 1) l = -l;
  return l;
}

/// Rows 0..max of Pascal's triangle.
inline std::vector<std::vector<mpz_class>> pascal(long max) {
  std::vector<std::vector<mpz_class>> t(max + 1);
  for (long n = 0; n <= max; ++n) {
    t[n].assign(n + 1, 1);
    for (long k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

/// Partitions of {0..n-1} into exactly k blocks where elements 0..r-1 lie in
/// distinct blocks, by walking restricted growth strings.
inline long count_partitions(int n, int k, int r = 0) {
  std::vector<int> block(n, 0);
  long count = 0;
  std::function<void(int, int)> walk = [&](int i, int used) {
    if (i == n) {
      if (used == k) ++count;
      return;
    }
    for (int b = 0; b <= used && b < k; ++b) {
      if (i < r && b != used) continue;  // a distinguished element opens a new block
      block[i] = b;
      walk(i + 1, b == used ? used + 1 : used);
    }
  };
  walk(0, 0);
  return count;
}

inline mpq_class harmonic_oracle(long n, long order, bool odd) {
  mpq_class s = 0;
  for (long j = 1; j <= n; ++j) {
    mpz_class d = odd ? 2 * j - 1 : j;
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(order));
    s += mpq_class(1, p);
  }
  s.canonicalize();
  return s;
}

/// x_{2-m} .. x_hi of the m-term recurrence from the given seeds
/// (seeds[i] holds x_{2-m+i}, m of them).
inline std::vector<mpz_class> mstep_oracle(int m, std::vector<mpz_class> seeds, long hi) {
  std::vector<mpz_class> x = std::move(seeds);
  while (static_cast<long>(x.size()) < hi + m - 1) {
    mpz_class s = 0;
    for (int i = 1; i <= m; ++i) s += x[x.size() - i];
    x.push_back(s);
  }
  return x;
}

/// w_lo .. w_hi of w_j = p w_{j-1} - q w_{j-2}, walking away from the seeds.
inline std::vector<mpq_class> horadam_oracle(mpq_class w0, mpq_class w1, mpq_class p, mpq_class q, long lo, long hi) {
  std::vector<mpq_class> up = {w0, w1};
  for (long j = 2; j <= hi; ++j) up.push_back(p * up[j - 1] - q * up[j - 2]);
  std::vector<mpq_class> down = {w1, w0};  // w_1, w_0, w_{-1}, ...
  for (long j = -1; j >= lo; --j) {
    const std::size_t s = down.size();
    mpq_class v = (p * down[s - 1] - down[s - 2]) / q;
    v.canonicalize();
    down.push_back(v);
  }
  std::vector<mpq_class> out;
  for (long j = lo; j <= hi; ++j) out.push_back(j >= 0 ? up[j] : down[1 - j]);
  return out;
}

}  // namespace dsum::testing
