#include "dsl.hpp"
#include "registry.hpp"

namespace dsum::detail {

namespace {

MStepKind kind_of(bool lucas) { return lucas ? MStepKind::Lucas : MStepKind::Fibonacci; }

// Σ_k Σ_{j<=k} C(n,j) X_{(m+1)j+t}, with an optional (-1)^k outer sign.
Q mstep_nested(Ctx& c, int m, MStepKind kind, long n, long t, bool alternate) {
  return nested(c, n, [&](long k, long j) {
    const Q v = C(n, j) * c.MS(m, kind, (m + 1) * j + t);
    return alternate ? Q(sgn(k)) * v : v;
  });
}

Q doubling_rhs(Ctx& c, int m, MStepKind kind, long n, long t) {
  Q s = pw(Q(2), n) * c.MS(m, kind, m * n + t);
  if (n > 0) s += Q(n) * pw(Q(2), n - 1) * c.MS(m, kind, m * (n - 1) + t);
  return s;
}

Q alternating_rhs(Ctx& c, int m, MStepKind kind, long n, long t) {
  Q s;
  for (long k = 0; k <= n; ++k) s += Q(sgn(k)) * C(n, k) * c.MS(m, kind, (m + 1) * k + t);
  return (s + pw(Q(-2), n) * c.MS(m, kind, m * n + t)) / Q(2);
}

const Constraint kShift = rule("t >= 2 - m", [](const Point& p) { return p.i("t") >= 2 - p.i("m"); });

IdentityDescriptor make(std::string id, std::string citation, std::string statement, std::vector<ParamSpec> params,
                        std::vector<Constraint> constraints, GridSpec g, CostClass cost, Point bench, Evaluator lhs,
                        Evaluator rhs, std::string note = {}) {
  return entry(std::move(id), std::move(citation), std::move(statement), Mode::ExactRational, std::move(params),
               std::move(constraints), std::move(g), cost, "n", std::move(bench), std::move(lhs), std::move(rhs),
               std::move(note));
}

}  // namespace

void register_mstep(std::vector<IdentityDescriptor>& out) {
  // Characteristic-root relations, reduced modulo x^m - x^{m-1} - ... - 1.
  out.push_back({
      .id = "L4.13a",
      .citation = "Lemma 4.13",
      .statement = "lambda^t (lambda^{m+1} + 1) = 2 lambda^{m+t} for every root lambda of x^m = x^{m-1} + ... + 1",
      .mode = Mode::QuotientPoly,
      .params = {I("m"), I("t")},
      .constraints = {at_least("m", 2), at_least("t", 0)},
      .grid = grid({{"m", ints(2, 8)}, {"t", ints(0, 10)}}),
      .cost = CostClass::Constant,
      .lhs = [](const Point& p, Ctx&) -> Value {
        const int m = static_cast<int>(p.i("m"));
        const long t = p.i("t");
        return QuotientPoly::monomial(m, t + m + 1, Q(1)) + QuotientPoly::monomial(m, t, Q(1));
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const int m = static_cast<int>(p.i("m"));
        return QuotientPoly::monomial(m, p.i("t") + m, Q(2));
      },
  });
  out.push_back({
      .id = "L4.13b",
      .citation = "Lemma 4.13",
      .statement = "lambda^t (1 - lambda^{m+1}) = 2 lambda^{m+t} (1 - lambda) for every root lambda of x^m = x^{m-1} + ... + 1",
      .mode = Mode::QuotientPoly,
      .params = {I("m"), I("t")},
      .constraints = {at_least("m", 2), at_least("t", 0)},
      .grid = grid({{"m", ints(2, 8)}, {"t", ints(0, 10)}}),
      .cost = CostClass::Constant,
      .lhs = [](const Point& p, Ctx&) -> Value {
        const int m = static_cast<int>(p.i("m"));
        const long t = p.i("t");
        return QuotientPoly::monomial(m, t, Q(1)) - QuotientPoly::monomial(m, t + m + 1, Q(1));
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const int m = static_cast<int>(p.i("m"));
        const long t = p.i("t");
        return QuotientPoly::monomial(m, t + m, Q(2)) - QuotientPoly::monomial(m, t + m + 1, Q(2));
      },
  });

  const std::vector<ParamSpec> general = {I("m"), I("n"), I("t")};
  const auto general_grid = grid({{"m", ints(2, 5)}, {"n", ints(0, 25)}, {"t", ints(-3, 4)}});
  const std::vector<Constraint> general_rules = {at_least("m", 2), at_least("n", 0), kShift};
  const Point general_bench = {{"m", Q(3)}, {"t", Q(0)}};

  for (bool lucas : {false, true}) {
    const std::string X = lucas ? "L^(m)" : "F^(m)";
    out.push_back(make(
        lucas ? "M4.15b" : "M4.15a", "Corollary 4.15",
        "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) " + X + "_{(m+1)j+t} = n 2^{n-1} " + X + "_{m(n-1)+t} + 2^n " + X + "_{mn+t}",
        general, general_rules, general_grid, CostClass::QuadraticVsConstant, general_bench,
        [lucas](const Point& p, Ctx& c) -> Value {
          return mstep_nested(c, static_cast<int>(p.i("m")), kind_of(lucas), p.i("n"), p.i("t"), false);
        },
        [lucas](const Point& p, Ctx& c) -> Value {
          return doubling_rhs(c, static_cast<int>(p.i("m")), kind_of(lucas), p.i("n"), p.i("t"));
        },
        "The first term on the right is absent at n = 0."));
  }
  for (bool lucas : {false, true}) {
    const std::string X = lucas ? "L^(m)" : "F^(m)";
    out.push_back(make(
        lucas ? "M4.16b" : "M4.16a", "Corollary 4.16",
        "sum_{k=0}^{n} sum_{j=0}^{k} (-1)^k C(n,j) " + X + "_{(m+1)j+t} = (1/2) (sum_{k=0}^{n} (-1)^k C(n,k) " + X +
            "_{(m+1)k+t} + (-2)^n " + X + "_{mn+t})",
        general, general_rules, general_grid, CostClass::QuadraticVsLinear, general_bench,
        [lucas](const Point& p, Ctx& c) -> Value {
          return mstep_nested(c, static_cast<int>(p.i("m")), kind_of(lucas), p.i("n"), p.i("t"), true);
        },
        [lucas](const Point& p, Ctx& c) -> Value {
          return alternating_rhs(c, static_cast<int>(p.i("m")), kind_of(lucas), p.i("n"), p.i("t"));
        }));
  }

  // Tribonacci (T = F^(3)) and Tetranacci (Q = F^(4)) cases.
  struct Particular {
    const char* id;
    int m;
    bool alternate;
  };
  const Particular cases[] = {{"M4.xa", 3, false}, {"M4.xb", 4, false}, {"M4.xc", 3, true}, {"M4.xd", 4, true}};
  for (const auto& pc : cases) {
    const int m = pc.m;
    const bool alternate = pc.alternate;
    const std::string X = m == 3 ? "T" : "Q";
    const std::string step = std::to_string(m + 1);
    const std::string statement =
        alternate ? "sum_{k=0}^{n} sum_{j=0}^{k} (-1)^k C(n,j) " + X + "_{" + step + "j+t} = (1/2) (sum_{k=0}^{n} (-1)^k C(n,k) " +
                        X + "_{" + step + "k+t} + (-2)^n " + X + "_{" + std::to_string(m) + "n+t})"
                  : "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) " + X + "_{" + step + "j+t} = n 2^{n-1} " + X + "_{" +
                        std::to_string(m) + "(n-1)+t} + 2^n " + X + "_{" + std::to_string(m) + "n+t}";
    out.push_back(make(
        pc.id, alternate ? "Corollary 4.16" : "Corollary 4.15", statement, {I("n"), I("t")},
        {at_least("n", 0), at_least("t", 2 - m)}, grid({{"n", ints(0, 25)}, {"t", ints(2 - m, 5)}}),
        alternate ? CostClass::QuadraticVsLinear : CostClass::QuadraticVsConstant, {{"t", Q(0)}},
        [m, alternate](const Point& p, Ctx& c) -> Value {
          return mstep_nested(c, m, MStepKind::Fibonacci, p.i("n"), p.i("t"), alternate);
        },
        [m, alternate](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), t = p.i("t");
          return alternate ? alternating_rhs(c, m, MStepKind::Fibonacci, n, t) : doubling_rhs(c, m, MStepKind::Fibonacci, n, t);
        }));
  }
}

}  // namespace dsum::detail
