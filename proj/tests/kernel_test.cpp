#include <gtest/gtest.h>

#include "dsum/kernel/big_rational.hpp"
#include "dsum/kernel/qsurd.hpp"
#include "dsum/kernel/quotient_poly.hpp"
#include "dsum/sequences/fibonacci.hpp"
#include "gen.hpp"

namespace dsum {
namespace {

using testing::Gen;
using Q = BigRational;

Q q(long a, long b = 1) { return Q(a) / Q(b); }

TEST(BigRational, Arithmetic) {
  EXPECT_EQ(rat_arith(q(1, 3), q(1, 6), RatOp::Add), q(1, 2));
  EXPECT_EQ(Q::parse("2/4"), q(1, 2));
  EXPECT_EQ(Q::parse("2/4").fraction_string(), "1/2");
  try {
    rat_arith(q(5), q(0), RatOp::Div);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
}

TEST(BigRational, CanonicalForm) {
  EXPECT_EQ(Q().fraction_string(), "0/1");
  EXPECT_EQ((q(1, 2) - q(1, 2)).fraction_string(), "0/1");
  Gen g(1);
  for (int i = 0; i < 500; ++i) {
    const Q a = g.rational(50);
    const Q b = g.nonzero_rational(50);
    for (const Q& r : {a + b, a - b, a * b, a / b}) {
      EXPECT_GT(sgn(r.denominator()), 0);
      EXPECT_EQ(gcd(r.numerator(), r.denominator()), 1);
    }
  }
}

TEST(BigRational, Pow) {
  EXPECT_EQ(pow(q(2, 3), 3), q(8, 27));
  EXPECT_EQ(pow(q(2, 3), -2), q(9, 4));
  EXPECT_EQ(pow(q(0), 0), q(1));
  EXPECT_THROW(pow(q(0), -1), Error);
}

TEST(BigRational, ParseAndFromDouble) {
  EXPECT_THROW(Q::parse("1/0"), Error);
  EXPECT_THROW(Q::parse("abc"), Error);
  EXPECT_EQ(Q::from_double(0.375), q(3, 8));
  EXPECT_EQ(Q::from_double(0.1).to_double(), 0.1);
}

TEST(QSurd, Powers) {
  EXPECT_EQ(pow(QSurd::alpha(), 10), QSurd(q(123, 2), q(55, 2)));
  EXPECT_EQ(QSurd::alpha() * QSurd::beta(), QSurd(-1));
  Gen g(2);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(pow(g.nonzero_surd(), 0), QSurd(1));
}

TEST(QSurd, AlphaPowerMatchesFibonacci) {
  for (long n = -40; n <= 40; ++n) {
    const QSurd expect = QSurd::alpha() * QSurd(Q(fib(n))) + QSurd(Q(fib(n - 1)));
    EXPECT_EQ(pow(QSurd::alpha(), n), expect) << n;
  }
}

TEST(QSurd, Conjugate) {
  EXPECT_EQ(QSurd::alpha().conj(), QSurd::beta());
  EXPECT_EQ(QSurd(q(7, 3)).conj(), QSurd(q(7, 3)));
  Gen g(3);
  for (int i = 0; i < 1000; ++i) {
    const QSurd x = g.surd();
    const QSurd y = g.surd();
    EXPECT_EQ(x.conj().conj(), x);
    EXPECT_EQ((x + y).conj(), x.conj() + y.conj());
    EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
  }
}

TEST(QSurd, FieldLaws) {
  Gen g(4);
  for (int i = 0; i < 500; ++i) {
    const QSurd a = g.surd();
    const QSurd b = g.surd();
    const QSurd c = g.surd();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    const QSurd z = g.nonzero_surd();
    EXPECT_EQ(z * z.inverse(), QSurd(1));
    EXPECT_EQ(z.norm(), z.rat() * z.rat() - Q(5) * z.surd() * z.surd());
  }
  try {
    QSurd().inverse();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInvertible);
  }
}

TEST(QSurd, MultiplicationRule) {
  // (a + b√5)(c + d√5) = (ac + 5bd) + (ad + bc)√5
  const QSurd z = QSurd(q(1, 2), q(3)) * QSurd(q(-2), q(1, 3));
  EXPECT_EQ(z, QSurd(q(-1) + q(5), q(1, 6) - q(6)));
}

TEST(QuotientPoly, CharacteristicRelations) {
  using Terms = std::vector<std::pair<long, Q>>;
  EXPECT_TRUE(qpoly_reduce_identity(3, Terms{{4, 1}, {0, 1}, {3, -2}}).is_zero());
  EXPECT_TRUE(qpoly_reduce_identity(2, Terms{{3, 1}, {0, 1}, {2, -2}}).is_zero());
  // (1 - λ^5) - 2λ^4(1 - λ)
  EXPECT_TRUE(qpoly_reduce_identity(4, Terms{{0, 1}, {5, -1}, {4, -2}, {5, 2}}).is_zero());
  EXPECT_FALSE(qpoly_reduce_identity(3, Terms{{4, 1}, {3, -2}}).is_zero());
  EXPECT_THROW(QuotientPoly(1), Error);
}

TEST(QuotientPoly, LambdaPowersFollowRecurrence) {
  for (int m = 2; m <= 6; ++m) {
    for (long e = m; e < 30; ++e) {
      QuotientPoly sum(m);
      for (int i = 1; i <= m; ++i) sum += pow_lambda(m, e - i);
      EXPECT_EQ(pow_lambda(m, e), sum);
    }
  }
}

TEST(QuotientPoly, RingLawsAndIdempotentReduction) {
  Gen g(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = static_cast<int>(g.integer(2, 6));
    auto random_poly = [&] {
      std::vector<Q> c(g.integer(1, 12));
      for (auto& x : c) x = g.rational(9);
      return QuotientPoly::reduce(m, c);
    };
    const QuotientPoly a = random_poly();
    const QuotientPoly b = random_poly();
    const QuotientPoly c = random_poly();
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(QuotientPoly::reduce(m, a.coeffs()), a);
    EXPECT_EQ(static_cast<int>(a.coeffs().size()), m);
  }
}

TEST(QuotientPoly, ModulusMismatch) {
  EXPECT_THROW(QuotientPoly(2) + QuotientPoly(3), Error);
}

}  // namespace
}  // namespace dsum
