#include <gtest/gtest.h>

#include "dsum/catalog/catalog.hpp"
#include "dsum/verifier/bench.hpp"
#include "dsum/verifier/report.hpp"
#include "dsum/verifier/verify.hpp"
#include "mutants.hpp"

namespace dsum {
namespace {

using Q = BigRational;

std::vector<GridOverride> overrides(std::initializer_list<std::pair<const char*, const char*>> specs) {
  std::vector<GridOverride> out;
  for (const auto& [name, spec] : specs) out.emplace_back(name, parse_axis(spec));
  return out;
}

TEST(Grid, ParseAxis) {
  EXPECT_EQ(std::get<IntRange>(parse_axis("-2..3")), (IntRange{-2, 3}));
  EXPECT_EQ(std::get<ValueList>(parse_axis("3,1/2,-1,3")).values, (std::vector<Q>{-1, Q(1) / Q(2), 3}));
  EXPECT_EQ(std::get<ValueList>(parse_axis("0.25")).values, (std::vector<Q>{Q(1) / Q(4)}));
  EXPECT_EQ(std::get<RealInterval>(parse_axis("0.5..1.5")), (RealInterval{0.5, 1.5}));
  for (const char* bad : {"", "3..1", "1,,2", "a..b", "1/0", "x"}) {
    try {
      parse_axis(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == ErrorCode::MalformedGrid || e.code() == ErrorCode::DivisionByZero) << bad;
    }
  }
}

TEST(Grid, ResolveRejectsMismatches) {
  const auto& t = find_identity("T3.1");
  EXPECT_THROW(resolve_grid(t, overrides({{"z", "1..2"}})), Error);
  EXPECT_THROW(resolve_grid(t, overrides({{"n", "0.5..1.5"}})), Error);
  EXPECT_THROW(resolve_grid(t, overrides({{"x", "0.5..1.5"}})), Error);
  const auto g = resolve_grid(t, overrides({{"n", "0..10"}, {"x", "2,3"}, {"y", "-2..2"}}));
  EXPECT_EQ(g.cardinality(), 110u);
}

TEST(Grid, LexicographicEnumeration) {
  const auto& t = find_identity("T3.1");
  const auto pts = enumerate_points(t, resolve_grid(t, overrides({{"n", "0..1"}, {"x", "2,3"}, {"y", "0..1"}})));
  ASSERT_EQ(pts.size(), 8u);
  EXPECT_EQ(pts.front().str(), "n=0, x=2, y=0");
  EXPECT_EQ(pts[1].str(), "n=0, x=2, y=1");
  EXPECT_EQ(pts.back().str(), "n=1, x=3, y=1");
}

TEST(Grid, RandomSamplingFollowsSeed) {
  const auto& e = find_identity("T3.3a");
  GridSpec g = resolve_grid(e);
  const auto a = enumerate_points(e, g);
  const auto b = enumerate_points(e, g);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 1050u);
  g.sampling.seed = 7;
  EXPECT_NE(enumerate_points(e, g), a);
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LE(a[i - 1].q("n"), a[i].q("n"));
}

TEST(Verify, GridExamples) {
  auto r = verify("T3.1", overrides({{"n", "0..10"}, {"x", "2,3"}, {"y", "-2..2"}}));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.points_checked, 110u);

  r = verify("T3.1");
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.points_checked + r.points_skipped, 26u * 7 * 7);
  EXPECT_EQ(r.points_skipped, 26u * 7);

  r = verify("O6.2a", overrides({{"n", "0..5"}}));
  EXPECT_EQ(r.points_checked, 5u);
  EXPECT_EQ(r.points_skipped, 1u);
  ASSERT_EQ(r.skipped.size(), 1u);
  EXPECT_EQ(r.skipped[0].reason, "n >= 1");

  r = verify("C3.4-2", overrides({{"n", "0..1"}, {"x", "2"}}));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.points_checked, 1u);
  EXPECT_EQ(r.points_skipped, 1u);

  r = verify("O6.2b", overrides({{"n", "1..30"}}));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.points_checked, 30u);
}

TEST(Verify, SkipAccounting) {
  for (const char* id : {"G4.8a", "H5.1a", "M4.15a", "W8.2", "C3.7-1"}) {
    const auto& e = find_identity(id);
    const auto g = resolve_grid(e);
    const auto r = verify(e, g);
    EXPECT_EQ(r.points_checked + r.points_skipped, g.cardinality()) << id;
    std::size_t logged = 0;
    for (const auto& s : r.skipped) logged += s.count;
    EXPECT_EQ(logged, r.points_skipped) << id;
  }
}

TEST(Verify, MutantsAreDetected) {
  for (const auto& m : testing::master_mutants()) {
    const auto r = verify(m.entry, resolve_grid(m.entry));
    EXPECT_FALSE(r.passed()) << m.name;
    EXPECT_GE(r.failures_total, 1u) << m.name;
  }
}

TEST(Verify, FailuresInPointOrderAndCapped) {
  const auto e = testing::master_mutants()[0].entry;
  const auto g = resolve_grid(e);
  const auto r = verify(e, g, {.workers = 4, .max_failures = 10});
  EXPECT_EQ(r.failures.size(), 10u);
  EXPECT_GT(r.failures_total, 10u);
  const auto pts = enumerate_points(e, g);
  std::size_t last = 0;
  for (const auto& f : r.failures) {
    const auto it = std::find(pts.begin(), pts.end(), f.point);
    ASSERT_NE(it, pts.end());
    const auto idx = static_cast<std::size_t>(it - pts.begin());
    EXPECT_GE(idx, last);
    last = idx;
  }
}

TEST(Verify, DeterministicAcrossWorkers) {
  for (const char* id : {"T3.1", "T3.3a", "G4.7", "W8.1"}) {
    const auto& e = find_identity(id);
    const auto g = resolve_grid(e);
    const auto a = verify(e, g, {.workers = 1});
    const auto b = verify(e, g, {.workers = 8});
    EXPECT_EQ(report_to_json(a, false), report_to_json(b, false)) << id;
  }
  const auto m = testing::master_mutants()[3].entry;
  EXPECT_EQ(report_to_json(verify(m, resolve_grid(m), {.workers = 1}), false),
            report_to_json(verify(m, resolve_grid(m), {.workers = 8}), false));
}

TEST(Verify, EvaluatorErrorsAreFailures) {
  auto e = testing::with_rhs("O6.2b", [](const Point&, EvalContext&) -> Value { throw Error(ErrorCode::Internal, "boom"); });
  const auto r = verify(e, resolve_grid(e));
  EXPECT_EQ(r.failures_total, r.points_checked);
  EXPECT_NE(r.failures.front().error.find("boom"), std::string::npos);
}

TEST(Report, RoundTrip) {
  const auto e = testing::master_mutants()[2].entry;
  const auto r = verify(e, resolve_grid(e));
  ASSERT_FALSE(r.failures.empty());
  EXPECT_EQ(report_from_json(report_to_json(r)), r);
  const auto pass = verify("G4.9");
  EXPECT_EQ(report_from_json(report_to_json(pass)), pass);
  const auto trig = verify("T3.3b");
  EXPECT_EQ(report_from_json(report_to_json(trig)), trig);
  EXPECT_EQ(trig.tolerance, 1e-9);
  EXPECT_NE(report_to_json(r).find("\"x\": \"-3/1\""), std::string::npos);
  EXPECT_THROW(report_from_json("{\"id\": 3}"), Error);
}

TEST(Shrink, ReducesTowardSmallCorner) {
  const auto e = testing::off_by_one_geometric();
  const Point start{{"n", 17}, {"x", 3}};
  const Point small = shrink(e, start);
  EXPECT_LE(small.i("n"), 2);
  EXPECT_LE(small.q("x").abs(), Q(2));
  EXPECT_EQ(e.violation(small), std::nullopt);
  EXPECT_FALSE(verify(e, [&] {
                 GridSpec g;
                 for (const auto& [name, value] : small.entries()) g.set(name, make_value_list({value}));
                 return g;
               }()).passed());
  EXPECT_EQ(shrink(e, start), small);
}

TEST(Shrink, RejectsPassingPoint) {
  try {
    shrink(find_identity("C3.4-1"), {{"n", 17}, {"x", 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotACounterexample);
  }
  EXPECT_THROW(shrink(testing::off_by_one_geometric(), {{"n", 17}, {"x", 1}}), Error);
}

TEST(Bench, TermCounts) {
  const auto t = bench(find_identity("T3.1"), {10, 1000}, 1);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].lhs_terms, 66u);
  EXPECT_EQ(t[1].lhs_terms, 501501u);
  EXPECT_GT(t[1].speedup, 1.0);

  const auto f = bench(find_identity("F4.1c"), {500}, 1);
  EXPECT_LE(f[0].rhs_seq_calls, 2u * 500 + 4);
  EXPECT_EQ(f[0].lhs_terms, 501u * 502 / 2);

  const auto s = bench(find_identity("S7.1a"), {50}, 1);
  EXPECT_EQ(s[0].lhs_terms, 51u);

  try {
    bench(find_identity("L4.3a"), {10}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotBenchmarkable);
  }
}

}  // namespace
}  // namespace dsum
