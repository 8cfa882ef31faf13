#include <gtest/gtest.h>

#include "dsum/sequences/fibonacci.hpp"
#include "dsum/sequences/gibonacci.hpp"
#include "dsum/sequences/horadam.hpp"
#include "dsum/sequences/mstep.hpp"
#include "dsum/kernel/quotient_poly.hpp"
#include "gen.hpp"
#include "oracles.hpp"

namespace dsum {
namespace {

using Q = BigRational;
using testing::Gen;

Q q(long a, long b = 1) { return Q(a) / Q(b); }

TEST(Fibonacci, Values) {
  EXPECT_EQ(fib(2), 1);
  EXPECT_EQ(fib(10), 55);
  EXPECT_EQ(fib(-5), 5);
  EXPECT_EQ(lucas(0), 2);
  EXPECT_EQ(lucas(-4), 7);
  EXPECT_EQ(lucas(1), 1);
}

TEST(Fibonacci, MatchesGmpAndNaive) {
  for (long n = -64; n <= 64; ++n) {
    EXPECT_EQ(fib(n), fib_naive(n)) << n;
    EXPECT_EQ(lucas(n), lucas_naive(n)) << n;
    EXPECT_EQ(fib(n), testing::fib_oracle(n)) << n;
    EXPECT_EQ(lucas(n), testing::lucas_oracle(n)) << n;
  }
  for (long n : {500L, 1000L, 4097L}) EXPECT_EQ(fib(n), testing::fib_oracle(n));
}

TEST(Fibonacci, DoublingProduct) {
  for (long n = 0; n <= 32; ++n) EXPECT_EQ(fib(n) * lucas(n), fib(2 * n));
}

TEST(Gibonacci, Values) {
  EXPECT_EQ(gibonacci({0, 1}, 7), q(13));
  EXPECT_EQ(gibonacci({2, 1}, 6), q(18));
  EXPECT_EQ(gibonacci({3, 1}, -1), q(-2));
  EXPECT_THROW(gibonacci({0, 0}, 3), Error);
}

TEST(Gibonacci, BinetWeights) {
  const QSurd root5(0, 1);
  auto [a, b] = gibonacci_binet_weights({0, 1});
  EXPECT_EQ(a, QSurd(1) / root5);
  EXPECT_EQ(b, QSurd(-1) / root5);
  auto [la, lb] = gibonacci_binet_weights({2, 1});
  EXPECT_EQ(la, QSurd(1));
  EXPECT_EQ(lb, QSurd(1));
  auto [ga, gb] = gibonacci_binet_weights({3, 1});
  EXPECT_EQ(ga.conj(), gb);
  EXPECT_EQ(ga * pow(QSurd::alpha(), 4) + gb * pow(QSurd::beta(), 4), QSurd(9));
}

TEST(Gibonacci, BinetAgreesWithRecurrence) {
  Gen g(11);
  for (int trial = 0; trial < 40; ++trial) {
    GibonacciSpec spec{g.integer(-9, 9), g.integer(-9, 9)};
    if (spec.g0.is_zero() && spec.g1.is_zero()) continue;
    auto [a, b] = gibonacci_binet_weights(spec);
    GibonacciSequence seq(spec);
    for (long n = -30; n <= 30; ++n) {
      const QSurd binet = a * pow(QSurd::alpha(), n) + b * pow(QSurd::beta(), n);
      EXPECT_TRUE(binet.is_rational());
      EXPECT_EQ(binet.rat(), seq.at(n));
      EXPECT_EQ(gibonacci(spec, n), seq.at(n));
    }
  }
}

TEST(Horadam, Values) {
  EXPECT_EQ(horadam({0, 1, 1, -1}, 9), q(34));
  EXPECT_EQ(horadam({2, 1, 1, -1}, 5), q(11));
  EXPECT_EQ(horadam({0, 1, q(7, 3), 5}, 2), q(7, 3));
  EXPECT_THROW(horadam({0, 1, 0, 1}, 2), Error);
  EXPECT_THROW(horadam({0, 1, 1, 0}, 2), Error);
}

TEST(Horadam, SpecialisesToFibonacciAndLucas) {
  for (long n = -20; n <= 20; ++n) {
    EXPECT_EQ(horadam({0, 1, 1, -1}, n), Q(fib(n)));
    EXPECT_EQ(horadam({2, 1, 1, -1}, n), Q(lucas(n)));
  }
}

TEST(Horadam, MatchesOracle) {
  Gen g(12);
  for (int trial = 0; trial < 30; ++trial) {
    const HoradamSpec spec{g.rational(5), g.rational(5), g.nonzero_rational(4), g.nonzero_rational(4)};
    const auto expect = testing::horadam_oracle(spec.w0.raw(), spec.w1.raw(), spec.p.raw(), spec.q.raw(), -12, 12);
    HoradamSequence seq(spec);
    for (long n = -12; n <= 12; ++n) {
      EXPECT_EQ(seq.at(n).raw(), expect[n + 12]);
      EXPECT_EQ(horadam(spec, n), seq.at(n));
    }
  }
}

TEST(MStep, Values) {
  EXPECT_EQ(mstep({3, MStepKind::Fibonacci}, 4), 4);
  EXPECT_EQ(mstep({4, MStepKind::Fibonacci}, 5), 8);
  EXPECT_EQ(mstep({3, MStepKind::Lucas}, 2), 4);
  EXPECT_THROW(mstep({3, MStepKind::Fibonacci}, -2), Error);
  EXPECT_THROW(mstep({1, MStepKind::Fibonacci}, 3), Error);
}

TEST(MStep, TwoStepIsFibonacciAndLucas) {
  for (long n = 0; n <= 40; ++n) {
    EXPECT_EQ(mstep({2, MStepKind::Fibonacci}, n), fib(n));
    EXPECT_EQ(mstep({2, MStepKind::Lucas}, n), lucas(n));
  }
}

TEST(MStep, MatchesOracle) {
  for (int m = 2; m <= 8; ++m) {
    std::vector<mpz_class> fseeds(m, 0);
    fseeds[m - 1] = 1;  // x_1
    std::vector<mpz_class> lseeds(m, 0);
    lseeds[m - 2] = m;  // x_0
    lseeds[m - 1] = 1;
    const auto f = testing::mstep_oracle(m, fseeds, 60);
    const auto l = testing::mstep_oracle(m, lseeds, 60);
    MStepSequence fs({m, MStepKind::Fibonacci});
    MStepSequence ls({m, MStepKind::Lucas});
    for (long n = 2 - m; n <= 60; ++n) {
      EXPECT_EQ(fs.at(n), f[n - (2 - m)]) << m << " " << n;
      EXPECT_EQ(ls.at(n), l[n - (2 - m)]) << m << " " << n;
    }
  }
}

// Power sums of the roots of x^m = x^{m-1} + ... + 1, two ways: Newton's
// identities (every e_i = (-1)^{i+1}) and the trace of multiplication by
// λ^n on the basis 1, λ, ..., λ^{m-1} of the quotient ring.
std::vector<mpz_class> newton_power_sums(int m, long count) {
  std::vector<mpz_class> p(count, 0);
  p[0] = m;
  for (long n = 1; n < count; ++n) {
    mpz_class s = n <= m ? mpz_class(n) : mpz_class(0);
    for (long i = 1; i <= m && i < n; ++i) s += p[n - i];
    p[n] = s;
  }
  return p;
}

Q trace_power(int m, long n) {
  Q t;
  for (int i = 0; i < m; ++i) t += pow_lambda(m, n + i).coeffs()[i];
  return t;
}

TEST(MStep, PowerSumsOfRoots) {
  for (int m = 2; m <= 5; ++m) {
    const auto p = newton_power_sums(m, 13);
    for (long n = 0; n <= 12; ++n) EXPECT_EQ(trace_power(m, n), Q(p[n])) << m << " " << n;
    for (long n = m + 1; n <= 12; ++n) {
      mpz_class s = 0;
      for (int i = 1; i <= m; ++i) s += p[n - i];
      EXPECT_EQ(p[n], s);
    }
    // The Lucas seeds L_0 = m, L_1 = 1 match the power sums at n = 0, 1.
    EXPECT_EQ(mstep({m, MStepKind::Lucas}, 0), p[0]);
    EXPECT_EQ(mstep({m, MStepKind::Lucas}, 1), p[1]);
    if (m == 2) {
      for (long n = 0; n <= 12; ++n) EXPECT_EQ(mstep({m, MStepKind::Lucas}, n), p[n]);
    } else {
      EXPECT_EQ(mstep({m, MStepKind::Lucas}, 2), m + 1);
      EXPECT_EQ(p[2], 3);
    }
  }
}

}  // namespace
}  // namespace dsum
