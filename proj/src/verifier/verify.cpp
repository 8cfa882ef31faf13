#include "dsum/verifier/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <optional>
#include <random>
#include <thread>

#include "dsum/catalog/catalog.hpp"

namespace dsum {

namespace {

[[noreturn]] void malformed(const std::string& id, const std::string& why) {
  throw Error(ErrorCode::MalformedGrid, id + ": " + why);
}

bool lex_less(const Point& a, const Point& b) {
  const auto& x = a.entries();
  const auto& y = b.entries();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i].second != y[i].second) return x[i].second < y[i].second;
  }
  return x.size() < y.size();
}

BigRational draw(const Axis& axis, std::mt19937_64& rng) {
  const std::uint64_t bits = rng();
  if (const auto* r = std::get_if<IntRange>(&axis)) {
    const auto width = static_cast<std::uint64_t>(r->hi - r->lo) + 1;
    return BigRational(r->lo + static_cast<long>(bits % width));
  }
  if (const auto* l = std::get_if<ValueList>(&axis)) return l->values[bits % l->values.size()];
  const auto& ri = std::get<RealInterval>(axis);
  const double unit = static_cast<double>(bits >> 11) * 0x1p-53;
  return BigRational::from_double(ri.lo + unit * (ri.hi - ri.lo));
}

std::vector<BigRational> axis_values(const Axis& axis) {
  if (const auto* r = std::get_if<IntRange>(&axis)) {
    std::vector<BigRational> out;
    for (long v = r->lo; v <= r->hi; ++v) out.emplace_back(v);
    return out;
  }
  return std::get<ValueList>(axis).values;
}

struct Outcome {
  enum Kind { Pass, Skip, Fail } kind = Pass;
  std::string reason;
  Failure failure;
};

Outcome check(const IdentityDescriptor& entry, const Point& p, EvalContext& ctx, double tolerance) {
  Outcome out;
  if (auto why = entry.violation(p)) {
    out.kind = Outcome::Skip;
    out.reason = *why;
    return out;
  }
  std::optional<Value> lhs;
  std::optional<Value> rhs;
  try {
    lhs = entry.lhs(p, ctx);
    rhs = entry.rhs(p, ctx);
  } catch (const std::exception& e) {
    out.kind = Outcome::Fail;
    out.failure = {p, lhs ? value_str(*lhs) : "", "", e.what()};
    return out;
  }
  if (!sides_agree(entry.mode, *lhs, *rhs, tolerance)) {
    out.kind = Outcome::Fail;
    out.failure = {p, value_str(*lhs), value_str(*rhs), ""};
  }
  return out;
}

bool fails(const IdentityDescriptor& entry, const Point& p, double tolerance) {
  EvalContext ctx;
  return check(entry, p, ctx, tolerance).kind == Outcome::Fail;
}

// Smaller candidates first: |c| for integers, |num| + den for rationals.
std::vector<BigRational> candidates(const BigRational& v, ParamKind kind) {
  auto height = [](const BigRational& q) { return BigRational(q.numerator()).abs() + BigRational(q.denominator()); };
  std::vector<BigRational> c;
  if (kind == ParamKind::Integer) {
    const long n = v.to_long();
    const long step = n > 0 ? 1 : -1;
    for (long x : {0L, step, n / 2, n - step}) {
      if (std::labs(x) < std::labs(n)) c.emplace_back(x);
    }
  } else {
    for (long x : {0L, 1L, -1L, 2L, -2L, 3L, -3L}) c.emplace_back(x);
    c.emplace_back(BigInt(v.numerator() / v.denominator()));
    std::erase_if(c, [&](const BigRational& x) { return !(height(x) < height(v)); });
  }
  std::stable_sort(c.begin(), c.end(), [&](const BigRational& a, const BigRational& b) {
    return height(a) < height(b) || (height(a) == height(b) && a.sign() > b.sign());
  });
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

}  // namespace

GridSpec resolve_grid(const IdentityDescriptor& entry, const std::vector<GridOverride>& overrides) {
  GridSpec g = entry.grid;
  for (const auto& [name, axis] : overrides) {
    if (entry.param(name) == nullptr) malformed(entry.id, "no parameter named '" + name + "'");
    g.set(name, axis);
  }
  for (const auto& [name, axis] : g.axes) {
    const ParamSpec* p = entry.param(name);
    if (p == nullptr) malformed(entry.id, "grid axis '" + name + "' is not a parameter");
    if (std::holds_alternative<RealInterval>(axis)) {
      if (p->kind != ParamKind::Real) malformed(entry.id, "'" + name + "' takes exact values, not an interval");
      if (g.sampling.kind != Sampling::Kind::Random) malformed(entry.id, "real interval needs random sampling");
    }
    if (const auto* r = std::get_if<IntRange>(&axis); r && r->lo > r->hi) malformed(entry.id, "empty range");
    if (const auto* l = std::get_if<ValueList>(&axis); l && l->values.empty()) malformed(entry.id, "empty list");
  }
  for (const auto& p : entry.params) {
    if (g.find(p.name) == nullptr) malformed(entry.id, "no axis for parameter '" + p.name + "'");
  }
  return g;
}

std::vector<Point> enumerate_points(const IdentityDescriptor& entry, const GridSpec& grid) {
  std::vector<std::pair<std::string, const Axis*>> axes;
  for (const auto& p : entry.params) {
    const Axis* a = grid.find(p.name);
    if (a == nullptr) malformed(entry.id, "no axis for parameter '" + p.name + "'");
    axes.emplace_back(p.name, a);
  }
  std::vector<Point> points;
  if (grid.sampling.kind == Sampling::Kind::Random) {
    std::mt19937_64 rng(grid.sampling.seed);
    points.reserve(grid.sampling.count);
    for (std::size_t i = 0; i < grid.sampling.count; ++i) {
      Point p;
      for (const auto& [name, axis] : axes) p.set(name, draw(*axis, rng));
      points.push_back(std::move(p));
    }
    std::stable_sort(points.begin(), points.end(), lex_less);
    return points;
  }
  std::vector<std::vector<BigRational>> values;
  for (const auto& [name, axis] : axes) values.push_back(axis_values(*axis));
  std::vector<std::size_t> idx(axes.size(), 0);
  while (true) {
    Point p;
    for (std::size_t a = 0; a < axes.size(); ++a) p.set(axes[a].first, values[a][idx[a]]);
    points.push_back(std::move(p));
    std::size_t a = axes.size();
    while (a > 0) {
      --a;
      if (++idx[a] < values[a].size()) break;
      idx[a] = 0;
      if (a == 0) return points;
    }
    if (axes.empty()) return points;
  }
}

bool sides_agree(Mode mode, const Value& lhs, const Value& rhs, double tolerance) {
  if (mode != Mode::FloatTrig) return lhs == rhs;
  const auto* l = std::get_if<double>(&lhs);
  const auto* r = std::get_if<double>(&rhs);
  if (l == nullptr || r == nullptr) return false;
  return std::fabs(*l - *r) <= tolerance * (1.0 + std::fabs(*l));
}

VerificationReport verify(const IdentityDescriptor& entry, const GridSpec& grid, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Point> points = enumerate_points(entry, grid);
  std::vector<Outcome> outcomes(points.size());

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    EvalContext ctx;
    for (std::size_t i = next++; i < points.size(); i = next++) {
      outcomes[i] = check(entry, points[i], ctx, options.tolerance);
    }
  };
  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  VerificationReport r;
  r.id = entry.id;
  r.mode = entry.mode;
  r.grid = grid_str(grid);
  if (entry.mode == Mode::FloatTrig) r.tolerance = options.tolerance;
  for (auto& o : outcomes) {
    if (o.kind == Outcome::Skip) {
      ++r.points_skipped;
      auto it = std::find_if(r.skipped.begin(), r.skipped.end(), [&](const SkipReason& s) { return s.reason == o.reason; });
      if (it == r.skipped.end()) {
        r.skipped.push_back({o.reason, 1});
      } else {
        ++it->count;
      }
      continue;
    }
    ++r.points_checked;
    if (o.kind == Outcome::Fail) {
      ++r.failures_total;
      if (r.failures.size() < options.max_failures) r.failures.push_back(std::move(o.failure));
    }
  }
  r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

VerificationReport verify(std::string_view id, const std::vector<GridOverride>& overrides,
                          const VerifyOptions& options) {
  const IdentityDescriptor& entry = find_identity(id);
  return verify(entry, resolve_grid(entry, overrides), options);
}

Point shrink(const IdentityDescriptor& entry, Point failing, double tolerance) {
  if (auto why = entry.violation(failing)) throw Error(ErrorCode::Domain, entry.id + ": " + *why);
  if (!fails(entry, failing, tolerance)) {
    throw Error(ErrorCode::NotACounterexample, entry.id + " holds at " + failing.str());
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& param : entry.params) {
      for (const auto& c : candidates(failing.q(param.name), param.kind)) {
        Point trial = failing;
        trial.set(param.name, c);
        if (entry.violation(trial) || !fails(entry, trial, tolerance)) continue;
        failing = std::move(trial);
        changed = true;
        break;
      }
    }
  }
  return failing;
}

}  // namespace dsum
