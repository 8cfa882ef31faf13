// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dsum/catalog/catalog.hpp"
#include "dsum/kernel/quotient_poly.hpp"
#include "dsum/verifier/bench.hpp"
#include "dsum/verifier/report.hpp"
#include "dsum/verifier/verify.hpp"
#include "mutants.hpp"

namespace {

using namespace dsum;
using Q = BigRational;

constexpr double kSuiteBudgetSeconds = 300.0;
constexpr double kTrigTolerance = 1e-9;
constexpr std::size_t kTrigSamplesPerN = 50;
constexpr long kTrigMaxN = 20;
constexpr std::uint64_t kSeed = 0;
constexpr unsigned kManyWorkers = 8;
constexpr int kBenchReps = 5;

struct Result {
  bool pass;
  std::string detail;
};

std::vector<VerificationReport> g_parallel_reports;

Result full_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  const unsigned workers = std::max(kManyWorkers, std::thread::hardware_concurrency());
  std::size_t points = 0;
  std::size_t failures = 0;
  std::string failed_ids;
  for (const auto& e : catalog_list()) {
    auto r = verify(e, resolve_grid(e), {.workers = workers});
    points += r.points_checked;
    failures += r.failures_total;
    if (!r.passed()) failed_ids += " " + e.id;
    g_parallel_reports.push_back(std::move(r));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  os << catalog_list().size() << " identities, " << points << " points, " << failures << " failures" << failed_ids
     << ", " << secs << " s (budget " << kSuiteBudgetSeconds << " s)";
  return {failures == 0 && catalog_list().size() == 132 && secs < kSuiteBudgetSeconds, os.str()};
}

Result spot_values() {
  struct Spot {
    const char* id;
    Point point;
    Q expect;
  };
  const std::vector<Spot> spots = {
      {"T3.1", {{"n", 2}, {"x", 2}, {"y", 1}}, Q(23)},
      {"C3.4-4", {{"n", 3}, {"y", 1}}, Q(-4)},
      {"O6.2b", {{"n", 2}}, Q(3) / Q(2)},
      {"O6.2a", {{"n", 2}}, Q(1)},
      {"O6.6a", {{"n", 1}}, Q(1) / Q(2)},
      {"H5.2a", {{"n", 2}}, Q(4) / Q(3)},
      {"M4.15a", {{"m", 3}, {"t", 0}, {"n", 1}}, Q(4)},
      {"S7.1a", {{"r", 4}, {"k", 2}}, Q(14)},
  };
  std::string bad;
  for (const auto& s : spots) {
    const Value l = evaluate(s.id, s.point, Side::Lhs);
    const Value r = evaluate(s.id, s.point, Side::Rhs);
    if (!(l == Value(s.expect) && r == Value(s.expect))) bad += std::string(" ") + s.id;
  }
  return {bad.empty(), std::to_string(spots.size()) + " spot values" + (bad.empty() ? "" : ", wrong:" + bad)};
}

Result surd_vanishing() {
  std::size_t points = 0;
  std::string bad;
  for (const auto& e : catalog_list()) {
    if (e.mode != Mode::QSurd) continue;
    EvalContext ctx;
    for (const auto& p : enumerate_points(e, resolve_grid(e))) {
      if (e.violation(p)) continue;
      const auto l = std::get<QSurd>(e.lhs(p, ctx));
      const auto r = std::get<QSurd>(e.rhs(p, ctx));
      ++points;
      if (!l.surd().is_zero() || !r.surd().is_zero() || l.rat() != r.rat()) {
        bad += " " + e.id + "(" + p.str() + ")";
        break;
      }
    }
  }
  return {bad.empty(), std::to_string(points) + " qsurd points with zero surd parts" + bad};
}

Result quotient_ring() {
  using Terms = std::vector<std::pair<long, Q>>;
  std::string bad;
  for (int m = 2; m <= 8; ++m) {
    const Terms first = {{m + 1, 1}, {0, 1}, {m, -2}};
    const Terms second = {{0, 1}, {m + 1, -1}, {m, -2}, {m + 1, 2}};
    if (!qpoly_reduce_identity(m, first).is_zero() || !qpoly_reduce_identity(m, second).is_zero()) {
      bad += " m=" + std::to_string(m);
    }
  }
  std::size_t points = 0;
  for (const char* id : {"L4.13a", "L4.13b"}) {
    const auto& e = find_identity(id);
    const auto r = verify(e, resolve_grid(e, {{"m", IntRange{2, 8}}}));
    points += r.points_checked;
    if (!r.passed()) bad += std::string(" ") + id;
  }
  return {bad.empty(), "both relations reduce to zero for m in [2, 8] (" + std::to_string(points) + " catalog points)" + bad};
}

Result trig_mode() {
  std::size_t points = 0;
  std::string bad;
  for (const char* id : {"T3.3a", "T3.3b"}) {
    const auto& e = find_identity(id);
    for (long n = 0; n <= kTrigMaxN; ++n) {
      GridSpec g = resolve_grid(e, {{"n", IntRange{n, n}}});
      g.sampling = Sampling::random(kTrigSamplesPerN, kSeed + static_cast<std::uint64_t>(n));
      const auto r = verify(e, g, {.tolerance = kTrigTolerance});
      points += r.points_checked;
      if (!r.passed() || r.points_checked != kTrigSamplesPerN) bad += " " + e.id + "@n=" + std::to_string(n);
    }
  }
  std::ostringstream os;
  os << points << " samples, n <= " << kTrigMaxN << ", |lhs - rhs| <= " << kTrigTolerance << " (1 + |lhs|)" << bad;
  return {bad.empty(), os.str()};
}

Result mutation_kill() {
  int killed = 0;
  std::string survivors;
  const auto mutants = testing::master_mutants();
  for (const auto& m : mutants) {
    const auto r = verify(m.entry, resolve_grid(m.entry));
    if (r.failures_total >= 1) {
      ++killed;
    } else {
      survivors += " [" + m.name + "]";
    }
  }
  return {killed == static_cast<int>(mutants.size()),
          std::to_string(killed) + "/" + std::to_string(mutants.size()) + " mutants detected" + survivors};
}

Result bench_property() {
  const std::vector<long> ns = {250, 500, 1000};
  const auto records = bench(find_identity("T3.1"), ns, kBenchReps);
  bool ok = true;
  std::ostringstream os;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto n = static_cast<std::uint64_t>(records[i].n);
    ok = ok && records[i].lhs_terms == (n + 1) * (n + 2) / 2;
    if (i > 0) ok = ok && records[i].speedup > records[i - 1].speedup;
    os << (i ? ", " : "") << "n=" << n << " terms " << records[i].lhs_terms << " speedup " << records[i].speedup;
  }
  return {ok, os.str()};
}

Result determinism() {
  std::size_t differ = 0;
  std::string ids;
  const auto& all = catalog_list();
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto serial = verify(all[i], resolve_grid(all[i]), {.workers = 1});
    if (report_to_json(serial, false) != report_to_json(g_parallel_reports.at(i), false)) {
      ++differ;
      ids += " " + all[i].id;
    }
  }
  return {differ == 0, std::to_string(all.size() - differ) + "/" + std::to_string(all.size()) +
                           " reports byte-identical for 1 and " + std::to_string(kManyWorkers) + "+ workers" + ids};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"AC1 full-suite exactness", full_suite},
      {"AC2 spot identities", spot_values},
      {"AC3 Q(sqrt5) surd vanishing", surd_vanishing},
      {"AC4 quotient-ring certification", quotient_ring},
      {"AC5 trig mode", trig_mode},
      {"AC6 mutation kill-rate", mutation_kill},
      {"AC7 benchmark property", bench_property},
      {"AC8 determinism", determinism},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Result r;
    try {
      r = run();
    } catch (const std::exception& e) {
      r = {false, std::string("threw: ") + e.what()};
    }
    std::printf("%-34s %s  %s\n", name.c_str(), r.pass ? "PASS" : "FAIL", r.detail.c_str());
    std::fflush(stdout);
    failed += r.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
