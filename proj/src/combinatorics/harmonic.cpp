#include "dsum/combinatorics/harmonic.hpp"

#include <deque>
#include <map>
#include <string>
#include <utility>

namespace dsum {

BigRational harmonic(long n, long order, HarmonicKind kind) {
  if (n < 0 || order < 1) {
    throw Error(ErrorCode::Domain,
                "harmonic number needs n >= 0 and order >= 1, got n=" + std::to_string(n) + " order=" + std::to_string(order));
  }
  // Per-thread prefix tables keep workers independent without locking.
  thread_local std::map<std::pair<long, HarmonicKind>, std::deque<BigRational>> prefixes;
  auto& table = prefixes[{order, kind}];
  if (table.empty()) table.emplace_back();
  while (static_cast<long>(table.size()) <= n) {
    const long j = static_cast<long>(table.size());
    const long base = kind == HarmonicKind::Plain ? j : 2 * j - 1;
    table.push_back(table.back() + pow(BigRational(base), order).inverse());
  }
  return table[n];
}

HarmonicValue harmonic_value(long n, long order, HarmonicKind kind) {
  return HarmonicValue{harmonic(n, order, kind), n, order, kind};
}

}  // namespace dsum
