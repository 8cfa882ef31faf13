#include "dsum/verifier/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace dsum {

namespace {

using Clock = std::chrono::steady_clock;

struct Timing {
  double ms = 0.0;
  std::uint64_t terms = 0;
  std::uint64_t seq_calls = 0;
};

double run_once(const Evaluator& side, const Point& p, EvalContext* counters = nullptr) {
  EvalContext ctx;
  const auto t0 = Clock::now();
  side(p, ctx);
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  if (counters != nullptr) *counters = std::move(ctx);
  return ms;
}

// Fast sides are timed in batches of at least a millisecond.
Timing measure(const Evaluator& side, const Point& p, int repetitions) {
  EvalContext counted;
  const double warm = run_once(side, p, &counted);
  const int batch = warm >= 1.0 ? 1 : static_cast<int>(std::min(10000.0, std::ceil(1.0 / std::max(warm, 1e-6))));
  std::vector<double> samples;
  for (int r = 0; r < repetitions; ++r) {
    double total = 0.0;
    for (int b = 0; b < batch; ++b) total += run_once(side, p);
    samples.push_back(total / batch);
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  const double median = samples.size() % 2 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2;
  return {median, counted.terms, counted.seq_calls};
}

}  // namespace

std::vector<BenchRecord> bench(const IdentityDescriptor& entry, const std::vector<long>& n_values, int repetitions) {
  if (entry.scale_param.empty()) {
    throw Error(ErrorCode::NotBenchmarkable, entry.id + " has no scaling parameter");
  }
  std::vector<BenchRecord> out;
  for (long n : n_values) {
    Point p;
    for (const auto& param : entry.params) {
      if (param.name == entry.scale_param) {
        p.set(param.name, BigRational(n));
      } else if (entry.bench_point.has(param.name)) {
        p.set(param.name, entry.bench_point.q(param.name));
      }
    }
    if (auto why = entry.violation(p)) {
      throw Error(ErrorCode::Domain, entry.id + " at " + entry.scale_param + "=" + std::to_string(n) + ": " + *why);
    }
    const Timing l = measure(entry.lhs, p, std::max(1, repetitions));
    const Timing r = measure(entry.rhs, p, std::max(1, repetitions));
    out.push_back({entry.id, n, l.ms, r.ms, r.ms > 0 ? l.ms / r.ms : 0.0, l.terms, r.terms, l.seq_calls, r.seq_calls});
  }
  return out;
}

}  // namespace dsum
