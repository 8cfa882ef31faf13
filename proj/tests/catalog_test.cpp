#include <gtest/gtest.h>

#include <map>
#include <regex>
#include <set>

#include "dsum/catalog/catalog.hpp"
#include "dsum/combinatorics/harmonic.hpp"
#include "dsum/sequences/fibonacci.hpp"
#include "dsum/verifier/verify.hpp"
#include "gen.hpp"
#include "oracles.hpp"

namespace dsum {
namespace {

using Q = BigRational;
using testing::Gen;

Q q(long a, long b = 1) { return Q(a) / Q(b); }

Q both_sides(std::string_view id, const Point& p) {
  const Value l = evaluate(id, p, Side::Lhs);
  const Value r = evaluate(id, p, Side::Rhs);
  EXPECT_EQ(l, r) << id << " at " << p.str();
  return std::get<Q>(l);
}

// "C3.4-2" -> "C3.4", "F4.3xa" -> "F4.3x", "T3.3b" -> "T3.3".
std::string group_of(const std::string& id) {
  static const std::regex tail("(-[0-9]+|[a-f])$");
  return std::regex_replace(id, tail, "");
}

TEST(Catalog, SizeAndUniqueIds) {
  const auto& all = catalog_list();
  EXPECT_EQ(all.size(), 132u);
  std::set<std::string> ids;
  for (const auto& e : all) EXPECT_TRUE(ids.insert(e.id).second) << e.id;
  EXPECT_TRUE(ids.count("T3.1"));
  EXPECT_TRUE(ids.count("S7.2a"));
  EXPECT_TRUE(ids.count("W8.1"));
}

TEST(Catalog, FamilySizes) {
  const std::map<std::string, int> expect = {
      {"T3.1", 1},  {"T3.2", 1},  {"T3.3", 2},  {"C3.4", 6},   {"C3.5", 5},  {"C3.6", 4},  {"C3.7", 3},
      {"R3.2", 2},  {"R3.3", 1},  {"F4.1", 6},  {"F4.2", 6},   {"F4.3", 4},  {"F4.3x", 2}, {"K4.4", 2},
      {"F4.5", 6},  {"F4.6", 2},  {"C4.8", 4},  {"F4.9", 4},   {"G4.7", 1},  {"G4.8", 3},  {"G4.9", 1},
      {"G4.10", 2}, {"G4.11", 1}, {"G4.12", 1}, {"G4.13", 4},  {"G4.14", 1}, {"L4.3", 3},  {"L4.13", 2},
      {"M4.15", 2}, {"M4.16", 2}, {"M4.x", 4},  {"H5.1", 4},   {"H5.2", 2},  {"H5.3", 2},  {"H5.B", 1},
      {"H5.4", 2},  {"H5.5", 3},  {"H5.6", 4},  {"O6.2", 4},   {"O6.4", 2},  {"O6.6", 2},  {"O6.8", 1},
      {"S7.1", 2},  {"S7.2", 2},  {"S7.3", 3},  {"S7.4", 5},   {"S7.5", 3},  {"W8.1", 1},  {"W8.2", 1},
  };
  std::map<std::string, int> got;
  for (const auto& e : catalog_list()) ++got[group_of(e.id)];
  EXPECT_EQ(got, expect);
  EXPECT_EQ(select_prefix("S7").size(), 15u);
}

TEST(Catalog, Modes) {
  std::set<std::string> qsurd;
  std::set<std::string> poly;
  std::set<std::string> trig;
  for (const auto& e : catalog_list()) {
    if (e.mode == Mode::QSurd) qsurd.insert(e.id);
    if (e.mode == Mode::QuotientPoly) poly.insert(e.id);
    if (e.mode == Mode::FloatTrig) trig.insert(e.id);
  }
  EXPECT_EQ(qsurd, (std::set<std::string>{"G4.7", "G4.9", "G4.12", "L4.3a", "L4.3b", "L4.3c"}));
  EXPECT_EQ(poly, (std::set<std::string>{"L4.13a", "L4.13b"}));
  EXPECT_EQ(trig, (std::set<std::string>{"T3.3a", "T3.3b"}));
}

TEST(Catalog, DescriptorsAreWellFormed) {
  for (const auto& e : catalog_list()) {
    SCOPED_TRACE(e.id);
    EXPECT_FALSE(e.citation.empty());
    EXPECT_FALSE(e.statement.empty());
    std::set<std::string> names;
    for (const auto& p : e.params) EXPECT_TRUE(names.insert(p.name).second);
    EXPECT_NO_THROW(resolve_grid(e));
    EXPECT_GT(resolve_grid(e).cardinality(), 0u);
    if (!e.scale_param.empty()) {
      EXPECT_NE(e.param(e.scale_param), nullptr);
      Point p = e.bench_point;
      p.set(e.scale_param, 20);
      EXPECT_EQ(e.violation(p), std::nullopt) << p.str();
    }
  }
}

TEST(Catalog, Cards) {
  EXPECT_NE(catalog_entry_doc("F4.1a").find("Proposition 4.1"), std::string::npos);
  EXPECT_NE(catalog_entry_doc("F4.1a").find("m != 1"), std::string::npos);
  EXPECT_NE(catalog_entry_doc("M4.15a").find("Corollary 4.15"), std::string::npos);
  EXPECT_NE(catalog_entry_doc("H5.1b").find("Proposition 5.1"), std::string::npos);
  EXPECT_EQ(catalog_entry_doc("T3.1"), catalog_entry_doc("T3.1"));
  EXPECT_THROW(catalog_entry_doc("X9.9"), Error);
}

TEST(Catalog, SpotValues) {
  EXPECT_EQ(both_sides("T3.1", {{"n", 2}, {"x", 2}, {"y", 1}}), q(23));
  EXPECT_EQ(both_sides("C3.4-4", {{"n", 3}, {"y", 1}}), q(-4));
  EXPECT_EQ(both_sides("O6.2b", {{"n", 2}}), q(3, 2));
  EXPECT_EQ(both_sides("O6.2a", {{"n", 2}}), q(1));
  EXPECT_EQ(both_sides("O6.6a", {{"n", 1}}), q(1, 2));
  EXPECT_EQ(both_sides("H5.2a", {{"n", 2}}), q(4, 3));
  EXPECT_EQ(both_sides("M4.15a", {{"m", 3}, {"t", 0}, {"n", 1}}), q(4));
  EXPECT_EQ(both_sides("S7.1a", {{"r", 4}, {"k", 2}}), q(14));
}

TEST(Catalog, DomainErrors) {
  try {
    evaluate("T3.1", {{"n", 2}, {"x", 1}, {"y", 1}}, Side::Lhs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Domain);
    EXPECT_NE(std::string(e.what()).find("x != 1"), std::string::npos);
  }
  EXPECT_THROW(evaluate("T3.1", {{"n", 2}, {"x", 3}}, Side::Lhs), Error);
  EXPECT_THROW(evaluate("T3.1", {{"n", q(1, 2)}, {"x", 3}, {"y", 1}}, Side::Lhs), Error);
  EXPECT_THROW(evaluate("T3.1", {{"n", 2}, {"x", 3}, {"y", 1}, {"z", 0}}, Side::Lhs), Error);
  EXPECT_THROW(evaluate("O6.2a", {{"n", 0}}, Side::Rhs), Error);
  EXPECT_THROW(evaluate("NOPE", {}, Side::Lhs), Error);
}

// Σ_k x^k Σ_{j<=k} C(n,j) y^j straight from Pascal's triangle.
mpq_class master_oracle(long n, const mpq_class& x, const mpq_class& y) {
  const auto t = testing::pascal(n);
  mpq_class s = 0;
  mpq_class xk = 1;
  for (long k = 0; k <= n; ++k) {
    mpq_class inner = 0;
    mpq_class yj = 1;
    for (long j = 0; j <= k; ++j) {
      inner += mpq_class(t[n][j]) * yj;
      yj *= y;
    }
    s += xk * inner;
    xk *= x;
  }
  s.canonicalize();
  return s;
}

TEST(Catalog, MasterIdentityMatchesOracle) {
  Gen g(21);
  for (int i = 0; i < 200; ++i) {
    const long n = g.integer(0, 18);
    const Q x = g.rational(6);
    const Q y = g.rational(6);
    if (x == Q(1)) continue;
    EXPECT_EQ(both_sides("T3.1", {{"n", n}, {"x", x}, {"y", y}}).raw(), master_oracle(n, x.raw(), y.raw()));
    EXPECT_EQ(both_sides("T3.2", {{"n", n}, {"x", x}, {"y", y}}).raw(), master_oracle(n, x.raw(), y.raw()));
  }
}

TEST(Catalog, LimitFormAtXEqualsOne) {
  for (long n = 0; n <= 15; ++n) {
    for (long y : {-3L, -1L, 0L, 2L, 5L}) {
      if (n == 0 && y == -1) continue;
      EXPECT_EQ(both_sides("C3.4-3", {{"n", n}, {"y", y}}).raw(), master_oracle(n, 1, y));
    }
  }
}

TEST(Catalog, HarmonicEvaluations) {
  for (long n = 1; n <= 30; ++n) {
    const mpq_class h = testing::harmonic_oracle(n, 1, false);
    EXPECT_EQ(both_sides("O6.2b", {{"n", n}}).raw(), h);
    mpq_class expect = 1 - (n + 1) * h;
    expect.canonicalize();
    EXPECT_EQ(both_sides("C3.5-4", {{"n", n}}).raw(), expect);
    mpq_class odd = testing::harmonic_oracle((n + 1) / 2, 1, true);
    odd /= mpq_class(mpz_class(1) << n);
    odd.canonicalize();
    EXPECT_EQ(both_sides("O6.6a", {{"n", n}}).raw(), odd);
  }
}

TEST(Catalog, HoradamFibonacciSpecialisation) {
  // p = 1, q = -1, w = F: v_m = L_m and q^e = (-1)^e.
  for (long n = 1; n <= 6; ++n) {
    for (long m = -2; m <= 3; ++m) {
      for (long r = 0; r < n; ++r) {
        for (long t = -3; t <= 3; ++t) {
          const Point p{{"n", n}, {"m", m}, {"r", r}, {"t", t}, {"p", 1}, {"q", -1}, {"w0", 0}, {"w1", 1}};
          const long e = m * (n - r - 1);
          const auto c = testing::pascal(n)[n - 1][r];
          mpz_class expect = ((r + e) % 2 ? -1 : 1) * c * testing::lucas_oracle(m) * testing::fib_oracle(t - e);
          EXPECT_EQ(both_sides("W8.1", p).raw(), mpq_class(expect)) << p.str();
        }
      }
    }
  }
}

TEST(Catalog, QSurdSidesAreRational) {
  for (const char* id : {"G4.7", "G4.9", "G4.12", "L4.3a", "L4.3b", "L4.3c"}) {
    const auto& e = find_identity(id);
    EvalContext ctx;
    for (const auto& p : enumerate_points(e, resolve_grid(e))) {
      if (e.violation(p)) continue;
      const auto l = std::get<QSurd>(e.lhs(p, ctx));
      const auto r = std::get<QSurd>(e.rhs(p, ctx));
      ASSERT_TRUE(l.surd().is_zero()) << id << " " << p.str();
      ASSERT_TRUE(r.surd().is_zero()) << id << " " << p.str();
      ASSERT_EQ(l.rat(), r.rat()) << id << " " << p.str();
    }
  }
}

TEST(Catalog, EveryEntryHoldsOnASample) {
  for (const auto& e : catalog_list()) {
    const auto points = enumerate_points(e, resolve_grid(e));
    EvalContext ctx;
    std::size_t checked = 0;
    for (std::size_t i = 0; i < points.size() && checked < 25; i += 1 + points.size() / 50) {
      if (e.violation(points[i])) continue;
      ++checked;
      EXPECT_TRUE(sides_agree(e.mode, e.lhs(points[i], ctx), e.rhs(points[i], ctx), 1e-9))
          << e.id << " at " << points[i].str();
    }
    EXPECT_GT(checked, 0u) << e.id;
  }
}

}  // namespace
}  // namespace dsum
