#include "dsl.hpp"
#include "registry.hpp"

namespace dsum::detail {

namespace {

GibonacciSpec spec_of(const Point& p) { return {p.q("g0"), p.q("g1")}; }

const Constraint kSeeds = rule("g0 and g1 not both zero",
                               [](const Point& p) { return !(p.q("g0").is_zero() && p.q("g1").is_zero()); });

std::vector<Constraint> rs_rules() {
  return {at_least("r", 0), at_least("s", 0),
          rule("n >= r + s", [](const Point& p) { return p.i("n") >= p.i("r") + p.i("s"); })};
}

std::vector<ParamSpec> rs_params(std::initializer_list<ParamSpec> extra = {}) {
  std::vector<ParamSpec> out = {I("n"), I("r"), I("s"), I("t"), R("g0"), R("g1")};
  out.insert(out.end(), extra);
  return out;
}

const Axis kG0 = vals({0, 2, frac(1, 2)});
const Axis kG1 = vals({1, -2});

GridSpec rs_grid(long n_hi, std::initializer_list<std::pair<std::string, Axis>> extra = {}) {
  GridSpec g = grid({{"n", ints(0, n_hi)}, {"r", ints(0, 2)}, {"s", ints(0, 2)}, {"t", ints(-3, 3)}, {"g0", kG0}, {"g1", kG1}});
  for (const auto& [name, axis] : extra) g.set(name, axis);
  return g;
}

const Point kRsBench = {{"r", Q(1)}, {"s", Q(1)}, {"t", Q(1)}, {"g0", Q(2)}, {"g1", Q(1)}};

Point with(Point p, const std::string& name, Q value) {
  p.set(name, std::move(value));
  return p;
}

/// Σ_{k=0}^{n} Σ_{j=r}^{k} C(n-r-s, j-r) body(k, j); summands with a vanishing
/// binomial are skipped, so body never sees a negative power of a zero base.
template <class Body>
Q shifted_nested(Ctx& c, const Point& p, Body body) {
  const long n = p.i("n"), r = p.i("r"), big_n = n - r - p.i("s");
  Q acc;
  for (long k = 0; k <= n; ++k) {
    for (long j = r; j <= k; ++j) {
      if (j - r > big_n) break;
      acc += C(big_n, j - r) * body(k, j);
      c.term();
    }
  }
  return acc;
}

/// Σ_{k=r}^{n} (-1)^k C(n-r-s, k-r) G_{step*k+t}.
Q alternating_single(Ctx& c, const Point& p, long step) {
  const long n = p.i("n"), r = p.i("r"), big_n = n - r - p.i("s"), t = p.i("t");
  const auto g = spec_of(p);
  Q acc;
  for (long k = r; k <= n; ++k) {
    acc += Q(sgn(k)) * C(big_n, k - r) * c.G(g, step * k + t);
    c.term();
  }
  return acc;
}

/// 5^{N/2} G_{i} for even N, 5^{(N-1)/2} (G_{i+1} + G_{i-1}) for odd N.
Q root5_gib(Ctx& c, const GibonacciSpec& g, long big_n, long i) {
  if (even(big_n)) return pw(Q(5), big_n / 2) * c.G(g, i);
  return pw(Q(5), (big_n - 1) / 2) * (c.G(g, i + 1) + c.G(g, i - 1));
}

struct QSurdForm {
  const char* id;
  const char* citation;
  const char* statement;
  long lead;
};

}  // namespace

void register_gibonacci(std::vector<IdentityDescriptor>& out) {
  auto cons = rs_rules();
  cons.push_back(kSeeds);
  const Axis xy = vals({-2, frac(1, 2), 1, 3});

  // Generic x, y forms evaluated in Q(sqrt5). lead is the step of the outer index.
  const QSurdForm forms[] = {
      {"G4.7", "Lemma 4.7",
       "sum_{k=0}^{n} sum_{j=r}^{k} C(n-r-s,j-r) x^{n-j-s} y^{j-r} G_{k+t} = G_{n+t+2} (x+y)^{n-r-s}"
       " - A alpha^{t+r+1} (x+alpha y)^{n-r-s} - B beta^{t+r+1} (x+beta y)^{n-r-s}",
       1},
      {"G4.9", "Lemma 4.9",
       "sum_{k=0}^{n} sum_{j=r}^{k} C(n-r-s,j-r) x^{n-j-s} y^{j-r} G_{2k+t} = G_{2n+t+1} (x+y)^{n-r-s}"
       " - A alpha^{t+2r-1} (x+alpha^2 y)^{n-r-s} - B beta^{t+2r-1} (x+beta^2 y)^{n-r-s}",
       2},
      {"G4.12", "Lemma 4.12",
       "sum_{k=0}^{n} sum_{j=r}^{k} C(n-r-s,j-r) x^{n-j-s} y^{j-r} G_{3k+t} = (1/2) G_{3n+t+2} (x+y)^{n-r-s}"
       " - (1/2) (A alpha^{t+3r-1} (x+alpha^3 y)^{n-r-s} + B beta^{t+3r-1} (x+beta^3 y)^{n-r-s})",
       3},
  };
  std::vector<IdentityDescriptor> generic;
  for (const auto& f : forms) {
    const long lead = f.lead;
    generic.push_back(entry(
        f.id, f.citation, f.statement, Mode::QSurd, rs_params({R("x"), R("y")}), cons,
        grid({{"n", ints(0, 8)}, {"r", ints(0, 2)}, {"s", ints(0, 2)}, {"t", vals({-1, 0, 2})}, {"g0", kG0}, {"g1", kG1},
              {"x", xy}, {"y", xy}}),
        CostClass::QuadraticVsConstant, "n", with(with(kRsBench, "x", Q(2)), "y", Q(3)),
        [lead](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), r = p.i("r"), s = p.i("s"), t = p.i("t");
          const auto g = spec_of(p);
          const Q& x = p.q("x");
          const Q& y = p.q("y");
          return QSurd(shifted_nested(c, p, [&](long k, long j) {
            return c.G(g, lead * k + t) * pw(x, n - j - s) * pw(y, j - r);
          }));
        },
        [lead](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n"), r = p.i("r"), s = p.i("s"), t = p.i("t");
          const long big_n = n - r - s;
          const auto g = spec_of(p);
          const Q& x = p.q("x");
          const Q& y = p.q("y");
          const auto [a, b] = gibonacci_binet_weights(g);
          const QSurd al = QSurd::alpha(), be = QSurd::beta();
          const long lead_index[] = {0, n + t + 2, 2 * n + t + 1, 3 * n + t + 2};
          const long root_exp[] = {0, t + r + 1, t + 2 * r - 1, t + 3 * r - 1};
          const QSurd closed = QSurd(c.G(g, lead_index[lead]) * pw(x + y, big_n));
          const QSurd roots = a * pow(al, root_exp[lead]) * pow(QSurd(x) + pow(al, lead) * QSurd(y), big_n) +
                              b * pow(be, root_exp[lead]) * pow(QSurd(x) + pow(be, lead) * QSurd(y), big_n);
          if (lead == 3) return (closed - roots) * QSurd(frac(1, 2));
          return closed - roots;
        }));
  }

  // Outer step 1.
  out.push_back(std::move(generic[0]));
  out.push_back(entry(
      "G4.8a", "Proposition 4.8",
      "sum_{k=0}^{n} sum_{j=r}^{k} (-1)^j C(n-r-s,j-r) F_{m+1}^{n-j-s} F_m^{j-r} G_{k+t} ="
      " (-1)^{m(n-r-s)-r+1} G_{t+r+1-m(n-r-s)} + (-1)^r F_{m-1}^{n-r-s} G_{n+t+2}",
      Mode::ExactRational, rs_params({I("m")}), cons, rs_grid(10, {{"m", ints(-3, 3)}}), CostClass::QuadraticVsConstant,
      "n", with(kRsBench, "m", Q(3)),
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s"), t = p.i("t"), m = p.i("m");
        const auto g = spec_of(p);
        const Q fa = c.F(m + 1), fb = c.F(m);
        return shifted_nested(c, p, [&](long k, long j) {
          return Q(sgn(j)) * pw(fa, n - j - s) * pw(fb, j - r) * c.G(g, k + t);
        });
      },
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s"), t = p.i("t"), m = p.i("m");
        const long big_n = n - r - s;
        const auto g = spec_of(p);
        return Q(sgn(m * big_n - r + 1)) * c.G(g, t + r + 1 - m * big_n) + Q(sgn(r)) * pw(c.F(m - 1), big_n) * c.G(g, n + t + 2);
      }));
  out.push_back(entry(
      "G4.8b", "Proposition 4.8",
      "sum_{k=r}^{n} (-1)^k C(n-r-s,k-r) G_{k+t} = (-1)^{n-s} G_{t+2r+s-n}", Mode::ExactRational, rs_params(), cons,
      rs_grid(20), CostClass::LinearVsConstant, "n", kRsBench,
      [](const Point& p, Ctx& c) -> Value { return alternating_single(c, p, 1); },
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s"), t = p.i("t");
        return Q(sgn(n - s)) * c.G(spec_of(p), t + 2 * r + s - n);
      }));
  out.push_back(entry(
      "G4.8c", "Proposition 4.8",
      "sum_{k=0}^{n} sum_{j=r}^{k} C(n-r-s,j-r) G_{k+t} = 2^{n-r-s} G_{n+t+2} - G_{t+r+1+2(n-r-s)}", Mode::ExactRational,
      rs_params(), cons, rs_grid(16), CostClass::QuadraticVsConstant, "n", kRsBench,
      [](const Point& p, Ctx& c) -> Value {
        const long t = p.i("t");
        const auto g = spec_of(p);
        return shifted_nested(c, p, [&](long k, long) { return c.G(g, k + t); });
      },
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s"), t = p.i("t");
        const long big_n = n - r - s;
        const auto g = spec_of(p);
        return pw(Q(2), big_n) * c.G(g, n + t + 2) - c.G(g, t + r + 1 + 2 * big_n);
      }));

  // Outer step 2.
  out.push_back(std::move(generic[1]));
  out.push_back(entry(
      "G4.10a", "Proposition 4.10",
      "sum_{k=0}^{n} sum_{j=r}^{k} (-1)^j C(n-r-s,j-r) F_{m+2}^{n-j-s} F_m^{j-r} G_{2k+t} ="
      " (-1)^{m(n-r-s)+r-1} G_{t+2r-1-m(n-r-s)} + (-1)^r F_{m+1}^{n-r-s} G_{2n+t+1}",
      Mode::ExactRational, rs_params({I("m")}), cons, rs_grid(10, {{"m", ints(-3, 3)}}), CostClass::QuadraticVsConstant,
      "n", with(kRsBench, "m", Q(3)),
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s"), t = p.i("t"), m = p.i("m");
        const auto g = spec_of(p);
        const Q fa = c.F(m + 2), fb = c.F(m);
        return shifted_nested(c, p, [&](long k, long j) {
          return Q(sgn(j)) * pw(fa, n - j - s) * pw(fb, j - r) * c.G(g, 2 * k + t);
        });
      },
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s"), t = p.i("t"), m = p.i("m");
        const long big_n = n - r - s;
        const auto g = spec_of(p);
        return Q(sgn(m * big_n + r - 1)) * c.G(g, t + 2 * r - 1 - m * big_n) +
               Q(sgn(r)) * pw(c.F(m + 1), big_n) * c.G(g, 2 * n + t + 1);
      }));
  out.push_back(entry(
      "G4.10b", "Proposition 4.10",
      "sum_{k=r}^{n} (-1)^k C(n-r-s,k-r) G_{2k+t} = (-1)^{n+s} G_{t+n+r-s}", Mode::ExactRational, rs_params(), cons,
      rs_grid(20), CostClass::LinearVsConstant, "n", kRsBench,
      [](const Point& p, Ctx& c) -> Value { return alternating_single(c, p, 2); },
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s"), t = p.i("t");
        return Q(sgn(n + s)) * c.G(spec_of(p), t + n + r - s);
      },
      "Uses 1 - alpha^2 = -alpha, so the index on the right is t+n+r-s."));
  out.push_back(entry(
      "G4.11", "Proposition 4.11",
      "sum_{k=0}^{n} sum_{j=r}^{k} C(n-r-s,j-r) G_{2k+t} = 2^{n-r-s} G_{2n+t+1} - (5^{(n-r-s)/2} G_{t+n+r-s-1} if n+r+s"
      " even, 5^{(n-r-s-1)/2} (G_{t+n+r-s} + G_{t+n+r-s-2}) if odd)",
      Mode::ExactRational, rs_params(), cons, rs_grid(16), CostClass::QuadraticVsConstant, "n", kRsBench,
      [](const Point& p, Ctx& c) -> Value {
        const long t = p.i("t");
        const auto g = spec_of(p);
        return shifted_nested(c, p, [&](long k, long) { return c.G(g, 2 * k + t); });
      },
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s"), t = p.i("t");
        const long big_n = n - r - s;
        const auto g = spec_of(p);
        return pw(Q(2), big_n) * c.G(g, 2 * n + t + 1) - root5_gib(c, g, big_n, t + n + r - s - 1);
      }));

  // Outer step 3.
  out.push_back(std::move(generic[2]));
  out.push_back(entry(
      "G4.13a", "Proposition 4.13",
      "sum_{k=0}^{n} sum_{j=r}^{k} (-1)^j C(n-r-s,j-r) F_{m+3}^{n-j-s} F_m^{j-r} G_{3k+t} ="
      " (-1)^{m(n-r-s)-r+1} 2^{n-r-s-1} G_{t+3r-1-m(n-r-s)} + (-1)^r 2^{n-r-s-1} F_{m+1}^{n-r-s} G_{3n+t+2}",
      Mode::ExactRational, rs_params({I("m")}), cons, rs_grid(10, {{"m", ints(-3, 3)}}), CostClass::QuadraticVsConstant,
      "n", with(kRsBench, "m", Q(3)),
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s"), t = p.i("t"), m = p.i("m");
        const auto g = spec_of(p);
        const Q fa = c.F(m + 3), fb = c.F(m);
        return shifted_nested(c, p, [&](long k, long j) {
          return Q(sgn(j)) * pw(fa, n - j - s) * pw(fb, j - r) * c.G(g, 3 * k + t);
        });
      },
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s"), t = p.i("t"), m = p.i("m");
        const long big_n = n - r - s;
        const auto g = spec_of(p);
        const Q half_pow = pw(Q(2), big_n - 1);
        return Q(sgn(m * big_n - r + 1)) * half_pow * c.G(g, t + 3 * r - 1 - m * big_n) +
               Q(sgn(r)) * half_pow * pw(c.F(m + 1), big_n) * c.G(g, 3 * n + t + 2);
      }));
  out.push_back(entry(
      "G4.13b", "Proposition 4.13",
      "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) G_{3k+t} = 2^{n-1} (G_{3n+t+2} - G_{2n+t-1})", Mode::ExactRational,
      {I("n"), I("t"), R("g0"), R("g1")}, {at_least("n", 0), kSeeds},
      grid({{"n", ints(0, 25)}, {"t", ints(-3, 3)}, {"g0", kG0}, {"g1", kG1}}), CostClass::QuadraticVsConstant, "n",
      {{"t", Q(1)}, {"g0", Q(2)}, {"g1", Q(1)}},
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), t = p.i("t");
        const auto g = spec_of(p);
        return nested(c, n, [&](long k, long j) { return C(n, j) * c.G(g, 3 * k + t); });
      },
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), t = p.i("t");
        const auto g = spec_of(p);
        return pw(Q(2), n - 1) * (c.G(g, 3 * n + t + 2) - c.G(g, 2 * n + t - 1));
      }));
  out.push_back(entry(
      "G4.13c", "Proposition 4.13",
      "sum_{k=r}^{n} (-1)^k C(n-r-s,k-r) G_{3k+t} = (-1)^{n-s} 2^{n-r-s} G_{t+2r+n-s}", Mode::ExactRational, rs_params(),
      cons, rs_grid(20), CostClass::LinearVsConstant, "n", kRsBench,
      [](const Point& p, Ctx& c) -> Value { return alternating_single(c, p, 3); },
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s"), t = p.i("t");
        return Q(sgn(n - s)) * pw(Q(2), n - r - s) * c.G(spec_of(p), t + 2 * r + n - s);
      }));
  out.push_back(entry(
      "G4.13d", "Proposition 4.13",
      "sum_{k=0}^{n} sum_{j=r}^{k} C(n-r-s,j-r) G_{3k+t} = 2^{n-r-s-1} (G_{3n+t+2} - G_{t+2(n-s)+r-1})",
      Mode::ExactRational, rs_params(), cons, rs_grid(16), CostClass::QuadraticVsConstant, "n", kRsBench,
      [](const Point& p, Ctx& c) -> Value {
        const long t = p.i("t");
        const auto g = spec_of(p);
        return shifted_nested(c, p, [&](long k, long) { return c.G(g, 3 * k + t); });
      },
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s"), t = p.i("t");
        const auto g = spec_of(p);
        return pw(Q(2), n - r - s - 1) * (c.G(g, 3 * n + t + 2) - c.G(g, t + 2 * (n - s) + r - 1));
      }));
  out.push_back(entry(
      "G4.14", "Proposition 4.14",
      "sum_{k=0}^{n} sum_{j=r}^{k} C(n-r-s,j-r) 2^j G_{3k+t} = 2^{r-1} 3^{n-r-s} G_{3n+t+2} - 2^{r-1} (5^{(n-r-s)/2}"
      " G_{t+3(n-s)-1} if n+r+s even, 5^{(n-r-s-1)/2} (G_{t+3(n-s)} + G_{t+3(n-s)-2}) if odd)",
      Mode::ExactRational, rs_params(), cons, rs_grid(16), CostClass::QuadraticVsConstant, "n", kRsBench,
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), t = p.i("t");
        const auto g = spec_of(p);
        const auto two = powers(Q(2), n);
        return shifted_nested(c, p, [&](long k, long j) { return two[j] * c.G(g, 3 * k + t); });
      },
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), r = p.i("r"), s = p.i("s"), t = p.i("t");
        const long big_n = n - r - s;
        const auto g = spec_of(p);
        const Q lead = pw(Q(2), r - 1);
        return lead * pw(Q(3), big_n) * c.G(g, 3 * n + t + 2) - lead * root5_gib(c, g, big_n, t + 3 * (n - s) - 1);
      }));

  // Root relations, weighted by the Binet coefficients of G: each side is
  // A alpha^t X(alpha) + B beta^t X(beta).
  struct RootLemma {
    const char* id;
    const char* statement;
    QSurd (*lhs)(const QSurd& root, long m);
    QSurd (*rhs)(const QSurd& root, long m, Ctx& c);
  };
  const RootLemma lemmas[] = {
      {"L4.3a", "alpha^{4m} + 1 = L_{2m} alpha^{2m}, and the same for beta",
       [](const QSurd& x, long m) { return pow(x, 4 * m) + QSurd(1); },
       [](const QSurd& x, long m, Ctx& c) { return QSurd(c.L(2 * m)) * pow(x, 2 * m); }},
      {"L4.3b", "alpha^{4m+2} - 1 = L_{2m+1} alpha^{2m+1}, and the same for beta",
       [](const QSurd& x, long m) { return pow(x, 4 * m + 2) - QSurd(1); },
       [](const QSurd& x, long m, Ctx& c) { return QSurd(c.L(2 * m + 1)) * pow(x, 2 * m + 1); }},
      {"L4.3c", "alpha^{4m+2} + 1 = F_{2m+1} (alpha^{2m} + alpha^{2m+2}), and the same for beta",
       [](const QSurd& x, long m) { return pow(x, 4 * m + 2) + QSurd(1); },
       [](const QSurd& x, long m, Ctx& c) { return QSurd(c.F(2 * m + 1)) * (pow(x, 2 * m) + pow(x, 2 * m + 2)); }},
  };
  for (const auto& lem : lemmas) {
    auto lhs_fn = lem.lhs;
    auto rhs_fn = lem.rhs;
    out.push_back(entry(
        lem.id, "Lemma 4.3", lem.statement, Mode::QSurd, {I("m"), I("t"), R("g0"), R("g1")}, {kSeeds},
        grid({{"m", ints(-6, 6)}, {"t", ints(-3, 3)}, {"g0", kG0}, {"g1", kG1}}), CostClass::Constant, "", {},
        [lhs_fn](const Point& p, Ctx&) -> Value {
          const long m = p.i("m"), t = p.i("t");
          const auto [a, b] = gibonacci_binet_weights(spec_of(p));
          const QSurd al = QSurd::alpha(), be = QSurd::beta();
          return a * pow(al, t) * lhs_fn(al, m) + b * pow(be, t) * lhs_fn(be, m);
        },
        [rhs_fn](const Point& p, Ctx& c) -> Value {
          const long m = p.i("m"), t = p.i("t");
          const auto [a, b] = gibonacci_binet_weights(spec_of(p));
          const QSurd al = QSurd::alpha(), be = QSurd::beta();
          return a * pow(al, t) * rhs_fn(al, m, c) + b * pow(be, t) * rhs_fn(be, m, c);
        },
        "Weighting by the Binet coefficients of G keeps both sides rational when the relation holds."));
  }
}

}  // namespace dsum::detail
