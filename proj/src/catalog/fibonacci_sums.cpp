#include "dsl.hpp"
#include "registry.hpp"

namespace dsum::detail {

namespace {

const Q& seq(Ctx& c, bool lucas, long i) { return lucas ? c.L(i) : c.F(i); }
const char* sym(bool lucas) { return lucas ? "L" : "F"; }
std::string suffix(char base, int offset) { return std::string(1, static_cast<char>(base + offset)); }

/// 5^{n/2} X_i for even n. For odd n, F_i becomes 5^{(n-1)/2} L_i and
/// L_i becomes 5^{(n+1)/2} F_i.
Q root5(Ctx& c, bool lucas, long n, long i) {
  if (even(n)) return pw(Q(5), n / 2) * seq(c, lucas, i);
  if (lucas) return pw(Q(5), (n + 1) / 2) * c.F(i);
  return pw(Q(5), (n - 1) / 2) * c.L(i);
}

/// Σ_{k=0}^{n} Σ_{j=0}^{k} C(n,j) body(k, j).
template <class Body>
Q binom_nested(Ctx& c, long n, Body body) {
  return nested(c, n, [&](long k, long j) { return C(n, j) * body(k, j); });
}

IdentityDescriptor make(std::string id, std::string citation, std::string statement, std::vector<ParamSpec> params,
                        std::vector<Constraint> constraints, GridSpec g, CostClass cost, Point bench, Evaluator lhs,
                        Evaluator rhs, std::string note = {}) {
  return entry(std::move(id), std::move(citation), std::move(statement), Mode::ExactRational, std::move(params),
               std::move(constraints), std::move(g), cost, "n", std::move(bench), std::move(lhs), std::move(rhs),
               std::move(note));
}

const Axis kN = ints(0, 25);
const Axis kT = ints(-3, 3);

}  // namespace

void register_fibonacci(std::vector<IdentityDescriptor>& out) {
  const auto n_ge0 = at_least("n", 0);
  const auto m_ne1 = differs("m", Q(1));
  const auto m_ne2 = differs("m", Q(2));
  const Axis m_axis = ints(-6, 6);

  // Ratio y = F_m / F_{m-1}.
  for (bool lucas : {false, true}) {
    const std::string X = sym(lucas);
    out.push_back(make(
        "F4.1" + suffix('a', lucas), "Proposition 4.1",
        "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) (F_m/F_{m-1})^j " + X + "_{k+j+t-1} = F_{m-1}^{-n} " + X +
            "_{(m+1)n+t+1} - sum_{k=0}^{n} C(n,k) (F_m/F_{m-1})^k " + X + "_{2k+t}",
        {I("n"), I("m"), I("t")}, {n_ge0, m_ne1}, grid({{"n", kN}, {"m", m_axis}, {"t", kT}}),
        CostClass::QuadraticVsLinear, {{"m", Q(3)}, {"t", Q(1)}},
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), m = p.i("m"), t = p.i("t");
          const auto ys = powers(c.F(m) / c.F(m - 1), n);
          return binom_nested(c, n, [&](long k, long j) { return ys[j] * seq(c, lucas, k + j + t - 1); });
        },
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), m = p.i("m"), t = p.i("t");
          const Q y = c.F(m) / c.F(m - 1);
          Q s;
          for (long k = 0; k <= n; ++k) s += C(n, k) * pw(y, k) * seq(c, lucas, 2 * k + t);
          return pw(c.F(m - 1), -n) * seq(c, lucas, (m + 1) * n + t + 1) - s;
        }));
  }
  out.push_back(make(
      "F4.1c", "Proposition 4.1",
      "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) F_{k+j+t-1} = F_{3n+t+1} - (5^{n/2} F_{n+t} if n even, 5^{(n-1)/2} L_{n+t} if n odd)",
      {I("n"), I("t")}, {n_ge0}, grid({{"n", kN}, {"t", kT}}), CostClass::QuadraticVsConstant, {{"t", Q(1)}},
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), t = p.i("t");
        return binom_nested(c, n, [&](long k, long j) { return c.F(k + j + t - 1); });
      },
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), t = p.i("t");
        return c.F(3 * n + t + 1) - root5(c, false, n, n + t);
      }));
  out.push_back(make(
      "F4.1d", "Proposition 4.1",
      "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) L_{k+j+t-1} = L_{3n+t+1} - (5^{n/2} L_{n+t} if n even, 5^{(n+1)/2} F_{n+t} if n odd)",
      {I("n"), I("t")}, {n_ge0}, grid({{"n", kN}, {"t", kT}}), CostClass::QuadraticVsConstant, {{"t", Q(1)}},
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), t = p.i("t");
        return binom_nested(c, n, [&](long k, long j) { return c.L(k + j + t - 1); });
      },
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), t = p.i("t");
        return c.L(3 * n + t + 1) - root5(c, true, n, n + t);
      }));
  for (bool lucas : {false, true}) {
    const std::string X = sym(lucas);
    out.push_back(make(
        "F4.1" + suffix('e', lucas), "Proposition 4.1",
        "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) (-1)^j " + X + "_{k+j+t-1} = (-1)^{n+1} (" + X + "_{n+t} - " + X + "_{t+1})",
        {I("n"), I("t")}, {n_ge0}, grid({{"n", kN}, {"t", kT}}), CostClass::QuadraticVsConstant, {{"t", Q(1)}},
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), t = p.i("t");
          return binom_nested(c, n, [&](long k, long j) { return Q(sgn(j)) * seq(c, lucas, k + j + t - 1); });
        },
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), t = p.i("t");
          return Q(sgn(n + 1)) * (seq(c, lucas, n + t) - seq(c, lucas, t + 1));
        }));
  }

  // Weights F_{m-2}^{-j}.
  for (bool lucas : {false, true}) {
    const std::string X = sym(lucas);
    out.push_back(make(
        "F4.2" + suffix('a', lucas), "Proposition 4.2",
        "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) F_{m-2}^{-j} " + X + "_{2k+mj+t+1} = (F_m/F_{m-2})^n " + X +
            "_{4n+t+2} - sum_{k=0}^{n} C(n,k) F_{m-2}^{-k} " + X + "_{(m+2)k+t}",
        {I("n"), I("m"), I("t")}, {n_ge0, m_ne2}, grid({{"n", kN}, {"m", m_axis}, {"t", kT}}),
        CostClass::QuadraticVsLinear, {{"m", Q(4)}, {"t", Q(1)}},
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), m = p.i("m"), t = p.i("t");
          const auto w = powers(c.F(m - 2).inverse(), n);
          return binom_nested(c, n, [&](long k, long j) { return w[j] * seq(c, lucas, 2 * k + m * j + t + 1); });
        },
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), m = p.i("m"), t = p.i("t");
          const Q w = c.F(m - 2).inverse();
          Q s;
          for (long k = 0; k <= n; ++k) s += C(n, k) * pw(w, k) * seq(c, lucas, (m + 2) * k + t);
          return pw(c.F(m) * w, n) * seq(c, lucas, 4 * n + t + 2) - s;
        }));
  }
  for (bool lucas : {false, true}) {
    const std::string X = sym(lucas);
    out.push_back(make(
        "F4.2" + suffix('c', lucas), "Proposition 4.2",
        "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) " + X + "_{2k+j+t+1} = " + X + "_{4n+t+2} - 2^n " + X + "_{2n+t}",
        {I("n"), I("t")}, {n_ge0}, grid({{"n", kN}, {"t", kT}}), CostClass::QuadraticVsConstant, {{"t", Q(1)}},
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), t = p.i("t");
          return binom_nested(c, n, [&](long k, long j) { return seq(c, lucas, 2 * k + j + t + 1); });
        },
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), t = p.i("t");
          return seq(c, lucas, 4 * n + t + 2) - pw(Q(2), n) * seq(c, lucas, 2 * n + t);
        }));
  }
  for (bool lucas : {false, true}) {
    const std::string X = sym(lucas);
    out.push_back(make(
        "F4.2" + suffix('e', lucas), "Proposition 4.2",
        "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) (-1)^j 3^{-j} " + X + "_{2k-2j+t+1} = 3^{-n} (" + X + "_{4n+t+2} - 2^n " +
            X + "_t)",
        {I("n"), I("t")}, {n_ge0}, grid({{"n", kN}, {"t", kT}}), CostClass::QuadraticVsConstant, {{"t", Q(1)}},
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), t = p.i("t");
          const auto w = powers(frac(-1, 3), n);
          return binom_nested(c, n, [&](long k, long j) { return w[j] * seq(c, lucas, 2 * k - 2 * j + t + 1); });
        },
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), t = p.i("t");
          return pw(Q(3), -n) * (seq(c, lucas, 4 * n + t + 2) - pw(Q(2), n) * seq(c, lucas, t));
        }));
  }

  // Step 3k on the outer index.
  for (bool lucas : {false, true}) {
    const std::string X = sym(lucas);
    out.push_back(make(
        "F4.3" + suffix('a', lucas), "Proposition 4.3",
        "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) F_{m-2}^{-j} " + X + "_{3k+mj+t+1} = (1/2) (F_m/F_{m-2})^n " + X +
            "_{5n+t+3} - (1/2) sum_{k=0}^{n} C(n,k) F_{m-2}^{-k} " + X + "_{(m+3)k+t}",
        {I("n"), I("m"), I("t")}, {n_ge0, m_ne2}, grid({{"n", kN}, {"m", m_axis}, {"t", kT}}),
        CostClass::QuadraticVsLinear, {{"m", Q(4)}, {"t", Q(1)}},
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), m = p.i("m"), t = p.i("t");
          const auto w = powers(c.F(m - 2).inverse(), n);
          return binom_nested(c, n, [&](long k, long j) { return w[j] * seq(c, lucas, 3 * k + m * j + t + 1); });
        },
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), m = p.i("m"), t = p.i("t");
          const Q w = c.F(m - 2).inverse();
          Q s;
          for (long k = 0; k <= n; ++k) s += C(n, k) * pw(w, k) * seq(c, lucas, (m + 3) * k + t);
          return (pw(c.F(m) * w, n) * seq(c, lucas, 5 * n + t + 3) - s) / Q(2);
        }));
  }
  for (bool lucas : {false, true}) {
    const std::string X = sym(lucas);
    out.push_back(make(
        "F4.3" + suffix('c', lucas), "Proposition 4.3",
        "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) " + X + "_{3k+j+t+1} = (1/2) (" + X + "_{5n+t+3} - 3^n " + X + "_{2n+t})",
        {I("n"), I("t")}, {n_ge0}, grid({{"n", kN}, {"t", kT}}), CostClass::QuadraticVsConstant, {{"t", Q(1)}},
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), t = p.i("t");
          return binom_nested(c, n, [&](long k, long j) { return seq(c, lucas, 3 * k + j + t + 1); });
        },
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), t = p.i("t");
          return (seq(c, lucas, 5 * n + t + 3) - pw(Q(3), n) * seq(c, lucas, 2 * n + t)) / Q(2);
        }));
  }
  out.push_back(make(
      "F4.3xa", "Section 4, showcase identity",
      "sum_{k=0}^{n} sum_{j=0}^{k} (-1)^k C(n,j) F_{3j+3k+t} = (-1)^n (2^{n-1} F_{5n+t+1} + 2^{2n-1} F_{3n+t-2})",
      {I("n"), I("t")}, {n_ge0}, grid({{"n", kN}, {"t", kT}}), CostClass::QuadraticVsConstant, {{"t", Q(1)}},
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), t = p.i("t");
        return binom_nested(c, n, [&](long k, long j) { return Q(sgn(k)) * c.F(3 * j + 3 * k + t); });
      },
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), t = p.i("t");
        return Q(sgn(n)) * (pw(Q(2), n - 1) * c.F(5 * n + t + 1) + pw(Q(2), 2 * n - 1) * c.F(3 * n + t - 2));
      }));
  out.push_back(make(
      "F4.3xb", "Section 4, showcase identity",
      "sum_{k=0}^{n} sum_{j=0}^{k} (-1)^j C(n,j) F_{3j+3k+t} = (-1)^n (2^{n-1} F_{4n+t+2} - 2^{2n-1} F_{3n+t-1})",
      {I("n"), I("t")}, {n_ge0}, grid({{"n", kN}, {"t", kT}}), CostClass::QuadraticVsConstant, {{"t", Q(1)}},
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), t = p.i("t");
        return binom_nested(c, n, [&](long k, long j) { return Q(sgn(j)) * c.F(3 * j + 3 * k + t); });
      },
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), t = p.i("t");
        return Q(sgn(n)) * (pw(Q(2), n - 1) * c.F(4 * n + t + 2) - pw(Q(2), 2 * n - 1) * c.F(3 * n + t - 1));
      }));

  // Single binomial sums with even step.
  for (bool lucas : {false, true}) {
    const std::string X = sym(lucas);
    out.push_back(make(
        "K4.4" + suffix('a', lucas), "Lemma 4.4",
        "sum_{k=0}^{n} C(n,k) " + X + "_{2sk+r} = L_s^n " + X + "_{sn+r} for even s; for odd s, F_s^n times (5^{n/2} " + X +
            "_{sn+r} if n even, " + (lucas ? "5^{(n+1)/2} F_{sn+r}" : "5^{(n-1)/2} L_{sn+r}") + " if n odd)",
        {I("n"), I("s"), I("r")}, {n_ge0}, grid({{"n", ints(0, 25)}, {"s", ints(-4, 4)}, {"r", kT}}),
        CostClass::LinearVsConstant, {{"s", Q(3)}, {"r", Q(1)}},
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), s = p.i("s"), r = p.i("r");
          Q acc;
          for (long k = 0; k <= n; ++k) {
            acc += C(n, k) * seq(c, lucas, 2 * s * k + r);
            c.term();
          }
          return acc;
        },
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), s = p.i("s"), r = p.i("r");
          if (even(s)) return pw(c.L(s), n) * seq(c, lucas, s * n + r);
          return pw(c.F(s), n) * root5(c, lucas, n, s * n + r);
        }));
  }

  // Steps 4u+2 and 4v+2.
  const Axis uv = ints(-2, 2);
  for (bool lucas : {false, true}) {
    const std::string X = sym(lucas);
    out.push_back(make(
        "F4.5" + suffix('a', lucas), "Proposition 4.5",
        "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) " + X + "_{(4u+2)k+(4v+2)j+t} = (F_{2v+1}^n / L_{2u+1}) P - (L_{2u+2v+2}^n / L_{2u+1}) " +
            X + "_{(2u+2v+2)n-(2u+1)+t}, P = 5^{n/2} " + X + "_{(4u+2v+3)n+2u+1+t} for even n, " +
            (lucas ? "5^{(n+1)/2} F" : "5^{(n-1)/2} L") + "_{(4u+2v+3)n+2u+1+t} for odd n",
        {I("n"), I("u"), I("v"), I("t")}, {n_ge0}, grid({{"n", ints(0, 16)}, {"u", uv}, {"v", uv}, {"t", kT}}),
        CostClass::QuadraticVsConstant, {{"u", Q(1)}, {"v", Q(1)}, {"t", Q(1)}},
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), u = p.i("u"), v = p.i("v"), t = p.i("t");
          return binom_nested(c, n, [&](long k, long j) { return seq(c, lucas, (4 * u + 2) * k + (4 * v + 2) * j + t); });
        },
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), u = p.i("u"), v = p.i("v"), t = p.i("t");
          const Q lu = c.L(2 * u + 1);
          return pw(c.F(2 * v + 1), n) / lu * root5(c, lucas, n, (4 * u + 2 * v + 3) * n + 2 * u + 1 + t) -
                 pw(c.L(2 * u + 2 * v + 2), n) / lu * seq(c, lucas, (2 * u + 2 * v + 2) * n - (2 * u + 1) + t);
        },
        lucas ? "For odd n the leading term is 5^{(n+1)/2} F." : ""));
  }
  for (bool lucas : {false, true}) {
    const std::string X = sym(lucas);
    out.push_back(make(
        "F4.5" + suffix('c', lucas), "Proposition 4.5",
        "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) " + X + "_{2(k+j)+t} = P - 3^n " + X + "_{2n-1+t}, P = 5^{n/2} " + X +
            "_{3n+1+t} for even n, " + (lucas ? "5^{(n+1)/2} F" : "5^{(n-1)/2} L") + "_{3n+1+t} for odd n",
        {I("n"), I("t")}, {n_ge0}, grid({{"n", kN}, {"t", kT}}), CostClass::QuadraticVsConstant, {{"t", Q(1)}},
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), t = p.i("t");
          return binom_nested(c, n, [&](long k, long j) { return seq(c, lucas, 2 * (k + j) + t); });
        },
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), t = p.i("t");
          return root5(c, lucas, n, 3 * n + 1 + t) - pw(Q(3), n) * seq(c, lucas, 2 * n - 1 + t);
        },
        lucas ? "For odd n the leading term is 5^{(n+1)/2} F." : ""));
  }
  for (bool lucas : {false, true}) {
    const std::string X = sym(lucas);
    out.push_back(make(
        "F4.5" + suffix('e', lucas), "Proposition 4.5",
        "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) " + X + "_{6(k+j)+t} = 2^{n-2} (P - 3^{2n} " + X + "_{3(2n-1)+t}), P = 5^{n/2} " +
            X + "_{3(3n+1)+t} for even n, " + (lucas ? "5^{(n+1)/2} F" : "5^{(n-1)/2} L") + "_{3(3n+1)+t} for odd n",
        {I("n"), I("t")}, {n_ge0}, grid({{"n", kN}, {"t", kT}}), CostClass::QuadraticVsConstant, {{"t", Q(1)}},
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), t = p.i("t");
          return binom_nested(c, n, [&](long k, long j) { return seq(c, lucas, 6 * (k + j) + t); });
        },
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), t = p.i("t");
          return pw(Q(2), n - 2) *
                 (root5(c, lucas, n, 3 * (3 * n + 1) + t) - pw(Q(3), 2 * n) * seq(c, lucas, 3 * (2 * n - 1) + t));
        },
        lucas ? "For odd n the leading term is 5^{(n+1)/2} F." : ""));
  }

  // u even, v odd.
  const auto u_even = rule("u even", [](const Point& p) { return even(p.i("u")); });
  const auto v_odd = rule("v odd", [](const Point& p) { return !even(p.i("v")); });
  for (bool lucas : {false, true}) {
    const std::string X = sym(lucas);
    out.push_back(make(
        "F4.6" + suffix('a', lucas), "Proposition 4.6",
        "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) " + X + "_{v(2k+1)+2uj+t} = (L_u^n / L_v) " + X +
            "_{(2v+u)n+2v+t} - (F_{v+u}^n / L_v) P, P = 5^{n/2} " + X + "_{(v+u)n+t} for even n, " +
            (lucas ? "5^{(n+1)/2} F" : "5^{(n-1)/2} L") + "_{(v+u)n+t} for odd n",
        {I("n"), I("u"), I("v"), I("t")}, {n_ge0, u_even, v_odd},
        grid({{"n", ints(0, 20)}, {"u", vals({-2, 0, 2})}, {"v", vals({-3, -1, 1, 3})}, {"t", kT}}),
        CostClass::QuadraticVsConstant, {{"u", Q(2)}, {"v", Q(1)}, {"t", Q(1)}},
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), u = p.i("u"), v = p.i("v"), t = p.i("t");
          return binom_nested(c, n, [&](long k, long j) { return seq(c, lucas, v * (2 * k + 1) + 2 * u * j + t); });
        },
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), u = p.i("u"), v = p.i("v"), t = p.i("t");
          const Q lv = c.L(v);
          return pw(c.L(u), n) / lv * seq(c, lucas, (2 * v + u) * n + 2 * v + t) -
                 pw(c.F(v + u), n) / lv * root5(c, lucas, n, (v + u) * n + t);
        }));
  }

  for (bool lucas : {false, true}) {
    const std::string X = sym(lucas);
    out.push_back(make(
        "C4.8" + suffix('a', lucas), "Corollary 4.8",
        "sum_{k=0}^{n} sum_{j=0}^{k} " + X + "_{2k+1} C(n,j) = 2^n " + X + "_{2n+2} - (5^{n/2} " + X + "_n if n even, " +
            (lucas ? "5^{(n+1)/2} F_n" : "5^{(n-1)/2} L_n") + " if n odd)",
        {I("n")}, {n_ge0}, grid({{"n", ints(0, 30)}}), CostClass::QuadraticVsConstant, {},
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n");
          return binom_nested(c, n, [&](long k, long) { return seq(c, lucas, 2 * k + 1); });
        },
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n");
          return pw(Q(2), n) * seq(c, lucas, 2 * n + 2) - root5(c, lucas, n, n);
        }));
  }
  for (bool lucas : {false, true}) {
    const std::string X = sym(lucas);
    out.push_back(make(
        "C4.8" + suffix('c', lucas), "Corollary 4.8",
        "sum_{k=0}^{n} sum_{j=0}^{k} " + X + "_{2k+1+4j} C(n,j) = 3^n " + X + "_{4n+2} - 2^n (5^{n/2} " + X +
            "_{3n} if n even, " + (lucas ? "5^{(n+1)/2} F_{3n}" : "5^{(n-1)/2} L_{3n}") + " if n odd)",
        {I("n")}, {n_ge0}, grid({{"n", ints(0, 30)}}), CostClass::QuadraticVsConstant, {},
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n");
          return binom_nested(c, n, [&](long k, long j) { return seq(c, lucas, 2 * k + 1 + 4 * j); });
        },
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n");
          return pw(Q(3), n) * seq(c, lucas, 4 * n + 2) - pw(Q(2), n) * root5(c, lucas, n, 3 * n);
        }));
  }

  // Outer weight 2^k.
  for (bool lucas : {false, true}) {
    const std::string X = sym(lucas);
    out.push_back(make(
        "F4.9" + suffix('a', lucas), "Proposition 4.9",
        "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) 2^k " + X + "_{j+t} = 2^{n+1} " + X + "_{2n+t} - " + X + "_{3n+t}",
        {I("n"), I("t")}, {n_ge0}, grid({{"n", ints(0, 25)}, {"t", kT}}), CostClass::QuadraticVsConstant, {{"t", Q(1)}},
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), t = p.i("t");
          const auto two = powers(Q(2), n);
          return binom_nested(c, n, [&](long k, long j) { return two[k] * seq(c, lucas, j + t); });
        },
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), t = p.i("t");
          return pw(Q(2), n + 1) * seq(c, lucas, 2 * n + t) - seq(c, lucas, 3 * n + t);
        }));
  }
  for (bool lucas : {false, true}) {
    const std::string X = sym(lucas);
    out.push_back(make(
        "F4.9" + suffix('c', lucas), "Proposition 4.9",
        "sum_{k=0}^{n} sum_{j=0}^{k} (-1)^j C(n,j) 2^k " + X + "_{2j+t} = (-1)^n (2^{n+1} " + X + "_{n+t} - " + X +
            "_{3n+t})",
        {I("n"), I("t")}, {n_ge0}, grid({{"n", ints(0, 25)}, {"t", kT}}), CostClass::QuadraticVsConstant, {{"t", Q(1)}},
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), t = p.i("t");
          const auto two = powers(Q(2), n);
          return binom_nested(c, n, [&](long k, long j) { return Q(sgn(j)) * two[k] * seq(c, lucas, 2 * j + t); });
        },
        [lucas](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), t = p.i("t");
          return Q(sgn(n)) * (pw(Q(2), n + 1) * seq(c, lucas, n + t) - seq(c, lucas, 3 * n + t));
        }));
  }
}

}  // namespace dsum::detail
