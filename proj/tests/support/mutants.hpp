#pragma once

// Deliberately broken right-hand sides used to check that the verifier
// notices when a closed form is wrong.

#include <string>
#include <vector>

#include "dsum/catalog/catalog.hpp"

namespace dsum::testing {

struct Mutant {
  std::string name;
  IdentityDescriptor entry;
};

inline IdentityDescriptor with_rhs(const std::string& id, Evaluator rhs) {
  IdentityDescriptor e = find_identity(id);
  e.rhs = std::move(rhs);
  return e;
}

/// Five variants of ((1+xy)^n - x^{n+1} (1+y)^n) / (1-x).
inline std::vector<Mutant> master_mutants() {
  using Q = BigRational;
  struct Args {
    long n;
    Q x, y;
  };
  auto args = [](const Point& p) { return Args{p.i("n"), p.q("x"), p.q("y")}; };
  return {
      {"sign flip", with_rhs("T3.1", [args](const Point& p, EvalContext&) -> Value {
         auto [n, x, y] = args(p);
         return (pow(Q(1) + x * y, n) + pow(x, n + 1) * pow(Q(1) + y, n)) / (Q(1) - x);
       })},
      {"index shift", with_rhs("T3.1", [args](const Point& p, EvalContext&) -> Value {
         auto [n, x, y] = args(p);
         return (pow(Q(1) + x * y, n) - pow(x, n + 1) * pow(Q(1) + y, n + 1)) / (Q(1) - x);
       })},
      {"off-by-one bound", with_rhs("T3.1", [args](const Point& p, EvalContext&) -> Value {
         auto [n, x, y] = args(p);
         return (pow(Q(1) + x * y, n) - pow(x, n) * pow(Q(1) + y, n)) / (Q(1) - x);
       })},
      {"swapped parity branch", with_rhs("T3.1", [args](const Point& p, EvalContext&) -> Value {
         auto [n, x, y] = args(p);
         const Q s = n % 2 == 0 ? -y : y;
         return (pow(Q(1) + x * s, n) - pow(x, n + 1) * pow(Q(1) + s, n)) / (Q(1) - x);
       })},
      {"dropped factor", with_rhs("T3.1", [args](const Point& p, EvalContext&) -> Value {
         auto [n, x, y] = args(p);
         return pow(Q(1) + x * y, n) - pow(x, n + 1) * pow(Q(1) + y, n);
       })},
  };
}

/// ((1+x)^n - 2^n x^{n+2}) / (1-x): exponent one too high.
inline IdentityDescriptor off_by_one_geometric() {
  using Q = BigRational;
  return with_rhs("C3.4-1", [](const Point& p, EvalContext&) -> Value {
    const long n = p.i("n");
    const Q& x = p.q("x");
    return (pow(Q(1) + x, n) - pow(Q(2), n) * pow(x, n + 2)) / (Q(1) - x);
  });
}

}  // namespace dsum::testing
