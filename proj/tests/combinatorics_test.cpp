#include <gtest/gtest.h>

#include "dsum/combinatorics/binomial.hpp"
#include "dsum/combinatorics/harmonic.hpp"
#include "dsum/combinatorics/stirling.hpp"
#include "oracles.hpp"

namespace dsum {
namespace {

using Q = BigRational;

Q q(long a, long b = 1) { return Q(a) / Q(b); }

TEST(Binomial, Values) {
  EXPECT_EQ(binom(5, 7), 0);
  EXPECT_EQ(binom(6, 3), 20);
  EXPECT_EQ(binom(4, 0), 1);
  EXPECT_EQ(binom(4, -1), 0);
  EXPECT_THROW(binom(-1, 2), Error);
}

TEST(Binomial, MatchesPascal) {
  const auto t = testing::pascal(60);
  for (long n = 0; n <= 60; ++n) {
    for (long k = -2; k <= n + 2; ++k) EXPECT_EQ(binom(n, k), (k < 0 || k > n) ? mpz_class(0) : t[n][k]);
  }
}

TEST(Binomial, Generalized) {
  EXPECT_EQ(gen_binom(q(7, 2), 2), q(35, 8));
  EXPECT_EQ(gen_binom(q(-5, 3), 0), q(1));
  EXPECT_EQ(gen_binom(q(3), 5), q(0));
  EXPECT_THROW(gen_binom(q(3), -1), Error);
  for (long n = 0; n <= 20; ++n) {
    for (long k = 0; k <= 25; ++k) EXPECT_EQ(gen_binom(Q(n), k), Q(binom(n, k)));
  }
  // Upper negation: C(-n, k) = (-1)^k C(n+k-1, k).
  for (long n = 1; n <= 10; ++n) {
    for (long k = 0; k <= 10; ++k) EXPECT_EQ(gen_binom(Q(-n), k), Q(k % 2 ? -1 : 1) * Q(binom(n + k - 1, k)));
  }
}

TEST(Binomial, AlternatingPartialSum) {
  for (long n = 1; n <= 20; ++n) {
    for (long k = 0; k <= n; ++k) {
      BigInt s = 0;
      for (long j = 0; j <= k; ++j) s += (j % 2 ? -1 : 1) * binom(n, j);
      EXPECT_EQ(s, (k % 2 ? -1 : 1) * binom(n - 1, k));
    }
  }
}

TEST(Binomial, Factorial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_THROW(factorial(-1), Error);
}

TEST(Harmonic, Values) {
  EXPECT_EQ(harmonic(3), q(11, 6));
  EXPECT_EQ(harmonic(0, 3), q(0));
  EXPECT_EQ(harmonic(0, 2, HarmonicKind::Odd), q(0));
  EXPECT_EQ(harmonic(2, 1, HarmonicKind::Odd), q(4, 3));
  EXPECT_THROW(harmonic(-1), Error);
  EXPECT_THROW(harmonic(3, 0), Error);
}

TEST(Harmonic, MatchesDirectSum) {
  for (long order = 1; order <= 4; ++order) {
    for (long n = 0; n <= 40; ++n) {
      EXPECT_EQ(harmonic(n, order).raw(), testing::harmonic_oracle(n, order, false));
      EXPECT_EQ(harmonic(n, order, HarmonicKind::Odd).raw(), testing::harmonic_oracle(n, order, true));
    }
  }
}

TEST(Harmonic, PrefixDifferences) {
  for (long order = 1; order <= 3; ++order) {
    for (long n = 1; n <= 200; ++n) {
      EXPECT_EQ(harmonic(n, order) - harmonic(n - 1, order), pow(Q(1) / Q(n), order));
      EXPECT_EQ(harmonic(n, order, HarmonicKind::Odd) - harmonic(n - 1, order, HarmonicKind::Odd),
                pow(Q(1) / Q(2 * n - 1), order));
    }
  }
}

TEST(Stirling, Values) {
  EXPECT_EQ(stirling2(4, 2), 7);
  EXPECT_EQ(stirling2(3, 5), 0);
  EXPECT_EQ(stirling2(0, 0), 1);
  EXPECT_EQ(stirling2(5, 0), 0);
  for (long n = 0; n <= 20; ++n) EXPECT_EQ(stirling2(n, n), 1);
  EXPECT_THROW(stirling2(-1, 0), Error);
}

TEST(Stirling, CountsSetPartitions) {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(stirling2(n, k), testing::count_partitions(n, k)) << n << " " << k;
  }
}

TEST(Stirling, RShifted) {
  EXPECT_EQ(rstirling2(5, 2, 2), 8);
  EXPECT_EQ(rstirling2(3, 2, 1), 3);
  EXPECT_THROW(rstirling2(1, 2, 2), Error);
  EXPECT_THROW(rstirling2(3, 1, 2), Error);
  EXPECT_THROW(rstirling2(3, 3, -1), Error);
  for (long n = 0; n <= 12; ++n) {
    for (long k = 0; k <= 12; ++k) EXPECT_EQ(rstirling2(n, k, 0), stirling2(n, k));
  }
  // {m + n, n}_n = n^m
  for (long n = 0; n <= 6; ++n) {
    for (long m = 0; m <= 6; ++m) {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), n, m);
      if (n == 0 && m == 0) p = 1;
      EXPECT_EQ(rstirling2(m + n, n, n), p);
    }
  }
}

TEST(Stirling, RShiftedCountsRestrictedPartitions) {
  for (int r = 0; r <= 3; ++r) {
    for (int n = 0; n <= 6; ++n) {
      for (int k = 0; k <= n; ++k) {
        EXPECT_EQ(rstirling2(n + r, k + r, r), testing::count_partitions(n + r, k + r, r)) << n << k << r;
        EXPECT_EQ(rstirling_alternating(n, k, r), rstirling2(n + r, k + r, r));
      }
    }
  }
}

TEST(Stirling, AlternatingSums) {
  for (long r = 0; r <= 10; ++r) {
    for (long k = 0; k <= 8; ++k) {
      BigInt s = 0;
      for (long p = 0; p <= k; ++p) {
        BigInt pr;
        mpz_ui_pow_ui(pr.get_mpz_t(), p, r);
        s += (p % 2 ? -1 : 1) * binom(k, p) * pr;
      }
      EXPECT_EQ(s, (k % 2 ? -1 : 1) * factorial(k) * stirling2(r, k));
    }
  }
  for (long v = 0; v <= 6; ++v) {
    for (long r = 0; r <= 8; ++r) {
      for (long k = 0; k <= 6; ++k) {
        BigInt s = 0;
        for (long p = 0; p <= k; ++p) {
          BigInt pr;
          mpz_ui_pow_ui(pr.get_mpz_t(), v + p, r);
          s += (p % 2 ? -1 : 1) * binom(k, p) * pr;
        }
        EXPECT_EQ(s, (k % 2 ? -1 : 1) * factorial(k) * rstirling2(r + v, k + v, v)) << v << r << k;
      }
    }
  }
}

TEST(Stirling, TableAgreesWithPointValues) {
  const StirlingTable t(12, 10, 3);
  for (long n = 0; n <= 12; ++n) {
    for (long k = 0; k <= 10; ++k) EXPECT_EQ(t.at(n, k), rstirling2(n + 3, k + 3, 3));
  }
}

}  // namespace
}  // namespace dsum
