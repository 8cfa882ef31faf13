#include "dsl.hpp"
#include "registry.hpp"

namespace dsum::detail {

namespace {

IdentityDescriptor make(std::string id, std::string citation, std::string statement, std::vector<ParamSpec> params,
                        std::vector<Constraint> constraints, GridSpec g, CostClass cost, Point bench, Evaluator lhs,
                        Evaluator rhs, std::string note = {}) {
  return entry(std::move(id), std::move(citation), std::move(statement), Mode::ExactRational, std::move(params),
               std::move(constraints), std::move(g), cost, "n", std::move(bench), std::move(lhs), std::move(rhs),
               std::move(note));
}

/// (j+s) C(j+r, j+s)
Q beta_den(long j, long r, long s) { return Q(j + s) * C(j + r, j + s); }
/// (k+s) C(k+r-1, k+s)
Q beta_den_lower(long k, long r, long s) { return Q(k + s) * C(k + r - 1, k + s); }
/// (n+s+1) C(n+r, n+s+1)
Q beta_den_tail(long n, long r, long s) { return Q(n + s + 1) * C(n + r, n + s + 1); }

/// Σ_{k=1}^{n} 1/(k 2^k)
Q half_log_partial(long n) {
  Q s;
  Q w(1);
  for (long k = 1; k <= n; ++k) {
    w /= Q(2);
    s += w / Q(k);
  }
  return s;
}

/// Σ_{k=0}^{n} Σ_{j=0}^{k} C(n,j) body(k, j).
template <class Body>
Q binom_nested(Ctx& c, long n, Body body) {
  return nested(c, n, [&](long k, long j) { return C(n, j) * body(k, j); });
}

const Axis kN = ints(0, 25);
const Axis kY = vals({-2, -1, frac(1, 2), 0, 1, 3});

}  // namespace

void register_harmonic(std::vector<IdentityDescriptor>& out) {
  const auto n_ge0 = at_least("n", 0);
  const std::vector<ParamSpec> nrs = {I("n"), I("r"), I("s")};
  const auto r_ge_s = rule("r >= s", [](const Point& p) { return p.i("r") >= p.i("s"); });
  const auto r_gt_s = rule("r >= s + 1", [](const Point& p) { return p.i("r") >= p.i("s") + 1; });
  const auto n_or_gap = rule("n >= 1 or r > s", [](const Point& p) { return p.i("n") >= 1 || p.i("r") > p.i("s"); });
  const auto grid_rs = grid({{"n", kN}, {"r", ints(1, 5)}, {"s", ints(1, 5)}});
  const Point bench_rs = {{"r", Q(3)}, {"s", Q(2)}};

  out.push_back(make(
      "H5.1a", "Proposition 5.1",
      "sum_{k=0}^{n} sum_{j=0}^{k} (-1)^j C(n,j) / ((j+s) C(j+r,j+s)) = n / (s C(n+r-1,s)) + 1 / (s C(n+r,s))", nrs,
      {n_ge0, at_least("s", 1), r_ge_s, n_or_gap}, grid_rs, CostClass::QuadraticVsConstant, bench_rs,
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s");
        return binom_nested(c, n, [&](long, long j) { return Q(sgn(j)) / beta_den(j, r, s); });
      },
      [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s");
        return Q(n) / (Q(s) * C(n + r - 1, s)) + Q(1) / (Q(s) * C(n + r, s));
      },
      "At n = 0 with r = s the first term on the right is 0/0."));
  out.push_back(make(
      "H5.1b", "Proposition 5.1",
      "sum_{k=0}^{n} sum_{j=0}^{k} (-1)^k C(n,j) / ((j+s) C(j+r,j+s)) = 1 / (2 s C(n+r,s))"
      " + ((-1)^n / 2) sum_{k=0}^{n} C(n,k) / ((k+s) C(k+r,k+s))",
      nrs, {n_ge0, at_least("s", 1), r_ge_s}, grid_rs, CostClass::QuadraticVsLinear, bench_rs,
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s");
        return binom_nested(c, n, [&](long k, long j) { return Q(sgn(k)) / beta_den(j, r, s); });
      },
      [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s");
        Q acc;
        for (long k = 0; k <= n; ++k) acc += C(n, k) / beta_den(k, r, s);
        return Q(1) / (Q(2 * s) * C(n + r, s)) + Q(sgn(n)) * acc / Q(2);
      }));
  out.push_back(make(
      "H5.1c", "Proposition 5.1",
      "sum_{k=0}^{n} sum_{j=0}^{k} (-1)^j C(n,j) (H_{r-s} - H_{j+r}) / ((j+s) C(j+r,j+s)) ="
      " (n/s) (H_{n-1+r-s} - H_{n-1+r}) / C(n-1+r,s) + (H_{n+r-s} - H_{n+r}) / (s C(n+r,s))",
      nrs, {n_ge0, at_least("s", 1), r_ge_s, n_or_gap}, grid_rs, CostClass::QuadraticVsLinear, bench_rs,
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s");
        const Q hrs = H(r - s);
        return binom_nested(c, n, [&](long, long j) { return Q(sgn(j)) * (hrs - H(j + r)) / beta_den(j, r, s); });
      },
      [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s");
        return Q(n) / Q(s) * (H(n - 1 + r - s) - H(n - 1 + r)) / C(n - 1 + r, s) + (H(n + r - s) - H(n + r)) / (Q(s) * C(n + r, s));
      },
      "At n = 0 with r = s the first term on the right is 0/0."));
  out.push_back(make(
      "H5.1d", "Proposition 5.1",
      "sum_{k=0}^{n} sum_{j=0}^{k} (-1)^k C(n,j) (H_{r-s} - H_{j+r}) / ((j+s) C(j+r,j+s)) = (H_{n+r-s} - H_{n+r}) /"
      " (2 s C(n+r,s)) + ((-1)^n / 2) sum_{k=0}^{n} C(n,k) (H_{r-s} - H_{k+r}) / ((k+s) C(k+r,k+s))",
      nrs, {n_ge0, at_least("s", 1), r_ge_s}, grid_rs, CostClass::QuadraticVsLinear, bench_rs,
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s");
        const Q hrs = H(r - s);
        return binom_nested(c, n, [&](long k, long j) { return Q(sgn(k)) * (hrs - H(j + r)) / beta_den(j, r, s); });
      },
      [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s");
        const Q hrs = H(r - s);
        Q acc;
        for (long k = 0; k <= n; ++k) acc += C(n, k) * (hrs - H(k + r)) / beta_den(k, r, s);
        return (H(n + r - s) - H(n + r)) / (Q(2 * s) * C(n + r, s)) + Q(sgn(n)) * acc / Q(2);
      }));

  // r = s = 1.
  out.push_back(make(
      "H5.2a", "Corollary 5.2", "sum_{k=0}^{n} sum_{j=0}^{k} (-1)^j C(n,j) / (j+1) = (n+2) / (n+1)", {I("n")},
      {at_least("n", 1)}, grid({{"n", ints(0, 40)}}), CostClass::QuadraticVsConstant, {},
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        return binom_nested(c, n, [&](long, long j) { return frac(sgn(j), j + 1); });
      },
      [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        return frac(n + 2, n + 1);
      }));
  out.push_back(make(
      "H5.2b", "Corollary 5.2", "sum_{k=0}^{n} sum_{j=0}^{k} (-1)^j C(n,j) H_{j+1} / (j+1) = 1/n + 1/(n+1)^2", {I("n")},
      {at_least("n", 1)}, grid({{"n", ints(0, 40)}}), CostClass::QuadraticVsConstant, {},
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        return binom_nested(c, n, [&](long, long j) { return Q(sgn(j)) * H(j + 1) / Q(j + 1); });
      },
      [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        return frac(1, n) + frac(1, (n + 1) * (n + 1));
      }));
  out.push_back(make(
      "H5.3a", "Corollary 5.3",
      "sum_{k=0}^{n} sum_{j=0}^{k} (-1)^k C(n,j) / (j+1) = (1 + (-1)^n (2^{n+1} - 1)) / (2n+2)", {I("n")}, {n_ge0},
      grid({{"n", ints(0, 40)}}), CostClass::QuadraticVsConstant, {},
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        return binom_nested(c, n, [&](long k, long j) { return frac(sgn(k), j + 1); });
      },
      [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        return (Q(1) + Q(sgn(n)) * (pw(Q(2), n + 1) - Q(1))) / Q(2 * n + 2);
      }));
  out.push_back(make(
      "H5.3b", "Corollary 5.3",
      "sum_{k=0}^{n} sum_{j=0}^{k} (-1)^k C(n,j) H_{j+1} / (j+1) = 1 / (2 (n+1)^2)"
      " + ((-2)^n / (n+1)) (H_{n+1} - sum_{k=1}^{n+1} 1 / (k 2^k))",
      {I("n")}, {n_ge0}, grid({{"n", ints(0, 40)}}), CostClass::QuadraticVsLinear, {},
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        return binom_nested(c, n, [&](long k, long j) { return Q(sgn(k)) * H(j + 1) / Q(j + 1); });
      },
      [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        return frac(1, 2 * (n + 1) * (n + 1)) + pw(Q(-2), n) / Q(n + 1) * (H(n + 1) - half_log_partial(n + 1));
      }));
  out.push_back(make(
      "H5.B", "Section 5, auxiliary binomial-harmonic sum",
      "sum_{k=0}^{n} C(n,k) H_k = 2^n (H_n - sum_{k=1}^{n} 1 / (k 2^k))", {I("n")}, {n_ge0}, grid({{"n", ints(0, 60)}}),
      CostClass::LinearVsLinear, {},
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        Q acc;
        for (long k = 0; k <= n; ++k) {
          acc += C(n, k) * H(k);
          c.term();
        }
        return acc;
      },
      [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        return pw(Q(2), n) * (H(n) - half_log_partial(n));
      }));

  // Generic y, r >= s + 1.
  const std::vector<ParamSpec> nrsy = {I("n"), I("r"), I("s"), R("y")};
  const auto grid_rsy = grid({{"n", ints(0, 16)}, {"r", ints(1, 5)}, {"s", ints(1, 4)}, {"y", kY}});
  const Point bench_rsy = {{"r", Q(3)}, {"s", Q(1)}, {"y", Q(2)}};
  out.push_back(make(
      "H5.4a", "Proposition 5.4",
      "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) y^j / ((k+s) C(k+r,k+s)) = sum_{k=0}^{n} C(n,k) y^k / ((k+s) C(k+r-1,k+s))"
      " - (1+y)^n / ((n+s+1) C(n+r,n+s+1))",
      nrsy, {n_ge0, at_least("s", 1), r_gt_s}, grid_rsy, CostClass::QuadraticVsLinear, bench_rsy,
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s");
        const auto ys = powers(p.q("y"), n);
        return binom_nested(c, n, [&](long k, long j) { return ys[j] / beta_den(k, r, s); });
      },
      [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s");
        const Q& y = p.q("y");
        Q acc;
        for (long k = 0; k <= n; ++k) acc += C(n, k) * pw(y, k) / beta_den_lower(k, r, s);
        return acc - pw(Q(1) + y, n) / beta_den_tail(n, r, s);
      }));
  out.push_back(make(
      "H5.4b", "Proposition 5.4",
      "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) y^j (H_{r-s} - H_{k+r}) / ((k+s) C(k+r,k+s)) = sum_{k=0}^{n} C(n,k) y^k"
      " (H_{r-1-s} - H_{k+r-1}) / ((k+s) C(k+r-1,k+s)) - (1+y)^n (H_{r-s-1} - H_{n+r}) / ((n+s+1) C(n+r,n+s+1))",
      nrsy, {n_ge0, at_least("s", 1), r_gt_s}, grid_rsy, CostClass::QuadraticVsLinear, bench_rsy,
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s");
        const auto ys = powers(p.q("y"), n);
        const Q hrs = H(r - s);
        return binom_nested(c, n, [&](long k, long j) { return ys[j] * (hrs - H(k + r)) / beta_den(k, r, s); });
      },
      [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s");
        const Q& y = p.q("y");
        const Q h = H(r - 1 - s);
        Q acc;
        for (long k = 0; k <= n; ++k) acc += C(n, k) * pw(y, k) * (h - H(k + r - 1)) / beta_den_lower(k, r, s);
        return acc - pw(Q(1) + y, n) * (h - H(n + r)) / beta_den_tail(n, r, s);
      }));

  // r = 2, s = 1.
  out.push_back(make(
      "H5.5a", "Corollary 5.5",
      "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) y^j / ((k+1)(k+2)) = ((1+y)^{n+1} - 1) / (y (n+1)) - (1+y)^n / (n+2)",
      {I("n"), R("y")}, {n_ge0, differs("y", Q(0))}, grid({{"n", kN}, {"y", kY}}), CostClass::QuadraticVsConstant,
      {{"y", Q(2)}},
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        const auto ys = powers(p.q("y"), n);
        return binom_nested(c, n, [&](long k, long j) { return ys[j] / Q((k + 1) * (k + 2)); });
      },
      [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        const Q& y = p.q("y");
        return (pw(Q(1) + y, n + 1) - Q(1)) / (y * Q(n + 1)) - pw(Q(1) + y, n) / Q(n + 2);
      }));
  out.push_back(make(
      "H5.5b", "Corollary 5.5",
      "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) y^j (H_{k+2} - 1) / ((k+1)(k+2)) = sum_{k=0}^{n} C(n,k) y^k H_{k+1} / (k+1)"
      " - (1+y)^n H_{n+2} / (n+2)",
      {I("n"), R("y")}, {n_ge0}, grid({{"n", kN}, {"y", kY}}), CostClass::QuadraticVsLinear, {{"y", Q(2)}},
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        const auto ys = powers(p.q("y"), n);
        return binom_nested(c, n, [&](long k, long j) { return ys[j] * (H(k + 2) - Q(1)) / Q((k + 1) * (k + 2)); });
      },
      [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        const Q& y = p.q("y");
        Q acc;
        for (long k = 0; k <= n; ++k) acc += C(n, k) * pw(y, k) * H(k + 1) / Q(k + 1);
        return acc - pw(Q(1) + y, n) * H(n + 2) / Q(n + 2);
      }));
  out.push_back(make(
      "H5.5c", "Corollary 5.5",
      "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) (H_{k+2} - 1) / ((k+1)(k+2)) = (2^{n+1} / (n+1)) (H_{n+1} - sum_{k=1}^{n+1}"
      " 1 / (k 2^k)) - 2^n H_{n+2} / (n+2)",
      {I("n")}, {n_ge0}, grid({{"n", ints(0, 40)}}), CostClass::QuadraticVsLinear, {},
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        return binom_nested(c, n, [&](long k, long) { return (H(k + 2) - Q(1)) / Q((k + 1) * (k + 2)); });
      },
      [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        return pw(Q(2), n + 1) / Q(n + 1) * (H(n + 1) - half_log_partial(n + 1)) - pw(Q(2), n) * H(n + 2) / Q(n + 2);
      }));

  // Fibonacci hybrids.
  const auto grid_rst = grid({{"n", ints(0, 16)}, {"r", ints(1, 5)}, {"s", ints(1, 4)}, {"t", ints(-3, 3)}});
  const Point bench_rst = {{"r", Q(3)}, {"s", Q(1)}, {"t", Q(1)}};
  struct Hybrid {
    const char* id;
    const char* statement;
    long step;
  };
  const Hybrid hybrids[] = {
      {"H5.6a",
       "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) F_{j+t} / ((k+s) C(k+r,k+s)) = sum_{k=0}^{n} C(n,k) F_{k+t} /"
       " ((k+s) C(k+r-1,k+s)) - F_{2n+t} / ((n+s+1) C(n+r,n+s+1))",
       1},
      {"H5.6b",
       "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) F_{3j+t} / ((k+s) C(k+r,k+s)) = sum_{k=0}^{n} C(n,k) F_{3k+t} /"
       " ((k+s) C(k+r-1,k+s)) - 2^n F_{2n+t} / ((n+s+1) C(n+r,n+s+1))",
       3},
  };
  for (const auto& hy : hybrids) {
    const long step = hy.step;
    out.push_back(make(
        hy.id, "Corollary 5.6", hy.statement, {I("n"), I("r"), I("s"), I("t")}, {n_ge0, at_least("s", 1), r_gt_s},
        grid_rst, CostClass::QuadraticVsLinear, bench_rst,
        [step](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), r = p.i("r"), s = p.i("s"), t = p.i("t");
          return binom_nested(c, n, [&](long k, long j) { return c.F(step * j + t) / beta_den(k, r, s); });
        },
        [step](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), r = p.i("r"), s = p.i("s"), t = p.i("t");
          Q acc;
          for (long k = 0; k <= n; ++k) acc += C(n, k) * c.F(step * k + t) / beta_den_lower(k, r, s);
          const Q scale = step == 3 ? pw(Q(2), n) : Q(1);
          return acc - scale * c.F(2 * n + t) / beta_den_tail(n, r, s);
        }));
  }
  out.push_back(make(
      "H5.6c", "Corollary 5.6",
      "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) F_{4uj+t} / ((k+s) C(k+r,k+s)) = sum_{k=0}^{n} C(n,k) F_{4uk+t} /"
      " ((k+s) C(k+r-1,k+s)) - L_{2u}^n F_{2un+t} / ((n+s+1) C(n+r,n+s+1))",
      {I("n"), I("r"), I("s"), I("t"), I("u")}, {n_ge0, at_least("s", 1), r_gt_s},
      grid({{"n", ints(0, 12)}, {"r", ints(1, 4)}, {"s", ints(1, 3)}, {"t", ints(-3, 3)}, {"u", ints(-2, 2)}}),
      CostClass::QuadraticVsLinear, {{"r", Q(3)}, {"s", Q(1)}, {"t", Q(1)}, {"u", Q(1)}},
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s"), t = p.i("t"), u = p.i("u");
        return binom_nested(c, n, [&](long k, long j) { return c.F(4 * u * j + t) / beta_den(k, r, s); });
      },
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s"), t = p.i("t"), u = p.i("u");
        Q acc;
        for (long k = 0; k <= n; ++k) acc += C(n, k) * c.F(4 * u * k + t) / beta_den_lower(k, r, s);
        return acc - pw(c.L(2 * u), n) * c.F(2 * u * n + t) / beta_den_tail(n, r, s);
      }));
  out.push_back(make(
      "H5.6d", "Corollary 5.6",
      "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) F_{j+t} (H_{k+2} - 1) / ((k+1)(k+2)) = sum_{k=0}^{n} C(n,k) F_{k+t} H_{k+1} /"
      " (k+1) - F_{2n+t} H_{n+2} / (n+2)",
      {I("n"), I("t")}, {n_ge0}, grid({{"n", kN}, {"t", ints(-3, 3)}}), CostClass::QuadraticVsLinear, {{"t", Q(1)}},
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), t = p.i("t");
        return binom_nested(c, n, [&](long k, long j) { return c.F(j + t) * (H(k + 2) - Q(1)) / Q((k + 1) * (k + 2)); });
      },
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), t = p.i("t");
        Q acc;
        for (long k = 0; k <= n; ++k) acc += C(n, k) * c.F(k + t) * H(k + 1) / Q(k + 1);
        return acc - c.F(2 * n + t) * H(n + 2) / Q(n + 2);
      }));
}

}  // namespace dsum::detail
