#include <cmath>
#include <numbers>

#include "dsl.hpp"
#include "registry.hpp"

namespace dsum::detail {

namespace {

using LD = long double;

bool away_from_2pi_multiples(const Point& p) {
  const LD two_pi = 2 * std::numbers::pi_v<LD>;
  LD r = std::fmod(static_cast<LD>(p.d("x")), two_pi);
  if (r < 0) r += two_pi;
  return std::min(r, two_pi - r) > 0.1L;
}

// Σ_{k=0}^{n} f(kx) Σ_{j=0}^{k} C(n,j) y^j, accumulated in long double.
template <class Trig>
double trig_nested(const Point& p, Ctx& c, Trig f) {
  const long n = p.i("n");
  const LD x = p.d("x");
  const LD y = p.d("y");
  LD s = 0;
  for (long k = 0; k <= n; ++k) {
    LD inner = 0;
    for (long j = 0; j <= k; ++j) {
      inner += static_cast<LD>(binom(n, j).get_d()) * std::pow(y, static_cast<LD>(j));
      c.term();
    }
    s += f(k * x) * inner;
  }
  return static_cast<double>(s);
}

LD cot_half(LD x) { return std::cos(x / 2) / std::sin(x / 2); }


}  // namespace

void register_binomial(std::vector<IdentityDescriptor>& out) {
  const auto n_ge0 = at_least("n", 0);
  const auto x_ne1 = differs("x", Q(1));
  const Axis small = vals({-3, -2, -1, frac(-2, 3), 0, frac(1, 2), 1, 2, 3});

  // Shared closed form ((1+xy)^n − x^{n+1}(1+y)^n)/(1−x).
  auto master_rhs = [](const Point& p, Ctx&) -> Value {
    const long n = p.i("n");
    const Q x = p.q("x");
    const Q y = p.q("y");
    return (pw(Q(1) + x * y, n) - pw(x, n + 1) * pw(Q(1) + y, n)) / (Q(1) - x);
  };

  out.push_back({
      .id = "T3.1",
      .citation = "Theorem 3.1",
      .statement = "sum_{k=0}^{n} x^k sum_{j=0}^{k} C(n,j) y^j = ((1+xy)^n - x^{n+1} (1+y)^n) / (1-x)",
      .mode = Mode::ExactRational,
      .params = {I("n"), R("x"), R("y")},
      .constraints = {n_ge0, x_ne1},
      .grid = grid({{"n", ints(0, 25)}, {"x", ints(-3, 3)}, {"y", ints(-3, 3)}}),
      .cost = CostClass::QuadraticVsConstant,
      .scale_param = "n",
      .bench_point = {{"x", Q(2)}, {"y", Q(3)}},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        const auto b = binom_row(n);
        const auto ys = powers(p.q("y"), n);
        const Q& x = p.q("x");
        Q s;
        Q xk(1);
        for (long k = 0; k <= n; ++k) {
          Q inner;
          for (long j = 0; j <= k; ++j) {
            inner += b[j] * ys[j];
            c.term();
          }
          s += xk * inner;
          xk *= x;
        }
        return s;
      },
      .rhs = master_rhs,
  });

  out.push_back({
      .id = "T3.2",
      .citation = "Theorem 3.2",
      .statement = "sum_{k=0}^{n} x^k sum_{j=0}^{k} C(k-n,j) (1+y)^{k-j} (-y)^j = ((1+xy)^n - x^{n+1} (1+y)^n) / (1-x)",
      .note = "C(k-n,j) is the generalized binomial coefficient with a non-positive upper index.",
      .mode = Mode::ExactRational,
      .params = {I("n"), R("x"), R("y")},
      .constraints = {n_ge0, x_ne1},
      .grid = grid({{"n", ints(0, 14)}, {"x", small}, {"y", small}}),
      .cost = CostClass::QuadraticVsConstant,
      .scale_param = "n",
      .bench_point = {{"x", Q(2)}, {"y", Q(3)}},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        const Q& x = p.q("x");
        const Q& y = p.q("y");
        Q s;
        for (long k = 0; k <= n; ++k) {
          Q inner;
          for (long j = 0; j <= k; ++j) {
            inner += gen_binom(Q(k - n), j) * pw(Q(1) + y, k - j) * pw(-y, j);
            c.term();
          }
          s += pw(x, k) * inner;
        }
        return s;
      },
      .rhs = master_rhs,
  });

  const auto trig_grid = grid({{"n", ints(0, 20)}, {"x", reals(0.1, 2 * std::numbers::pi - 0.1)}, {"y", reals(-1.5, 1.5)}},
                              Sampling::random(1050, 0));
  const Constraint x_off = rule("x not within 0.1 of a multiple of 2*pi", away_from_2pi_multiples);

  out.push_back({
      .id = "T3.3a",
      .citation = "Theorem 3.3",
      .statement = "sum_{k=0}^{n} cos(kx) sum_{j=0}^{k} C(n,j) y^j = (1/2) (sum_{k=0}^{n} C(n,k) y^k (cos(kx) - sin(kx) cot(x/2))"
                   " - (1+y)^n (cos((n+1)x) - sin((n+1)x) cot(x/2)))",
      .note = "Inside the closing bracket cot(x/2) multiplies sin((n+1)x).",
      .mode = Mode::FloatTrig,
      .params = {I("n"), X("x"), X("y")},
      .constraints = {n_ge0, x_off},
      .grid = trig_grid,
      .cost = CostClass::QuadraticVsLinear,
      .scale_param = "n",
      .bench_point = {{"x", Q(1)}, {"y", frac(1, 2)}},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        return trig_nested(p, c, [](LD a) { return std::cos(a); });
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        const LD x = p.d("x");
        const LD y = p.d("y");
        const LD ct = cot_half(x);
        LD s = 0;
        for (long k = 0; k <= n; ++k) {
          s += static_cast<LD>(binom(n, k).get_d()) * std::pow(y, static_cast<LD>(k)) * (std::cos(k * x) - std::sin(k * x) * ct);
        }
        const LD tail = std::pow(1 + y, static_cast<LD>(n)) * (std::cos((n + 1) * x) - std::sin((n + 1) * x) * ct);
        return static_cast<double>((s - tail) / 2);
      },
  });

  out.push_back({
      .id = "T3.3b",
      .citation = "Theorem 3.3",
      .statement = "sum_{k=0}^{n} sin(kx) sum_{j=0}^{k} C(n,j) y^j = (1/2) (sum_{k=0}^{n} C(n,k) y^k (sin(kx) + cos(kx) cot(x/2))"
                   " - (1+y)^n (sin((n+1)x) + cos((n+1)x) cot(x/2)))",
      .note = "Inside the closing bracket cot(x/2) multiplies cos((n+1)x).",
      .mode = Mode::FloatTrig,
      .params = {I("n"), X("x"), X("y")},
      .constraints = {n_ge0, x_off},
      .grid = trig_grid,
      .cost = CostClass::QuadraticVsLinear,
      .scale_param = "n",
      .bench_point = {{"x", Q(1)}, {"y", frac(1, 2)}},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        return trig_nested(p, c, [](LD a) { return std::sin(a); });
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        const LD x = p.d("x");
        const LD y = p.d("y");
        const LD ct = cot_half(x);
        LD s = 0;
        for (long k = 0; k <= n; ++k) {
          s += static_cast<LD>(binom(n, k).get_d()) * std::pow(y, static_cast<LD>(k)) * (std::sin(k * x) + std::cos(k * x) * ct);
        }
        const LD tail = std::pow(1 + y, static_cast<LD>(n)) * (std::sin((n + 1) * x) + std::cos((n + 1) * x) * ct);
        return static_cast<double>((s - tail) / 2);
      },
  });

  // Specializations of the master identity.
  out.push_back({
      .id = "C3.4-1",
      .citation = "Corollary 3.4",
      .statement = "sum_{k=0}^{n} x^k sum_{j=0}^{k} C(n,j) = ((1+x)^n - 2^n x^{n+1}) / (1-x)",
      .mode = Mode::ExactRational,
      .params = {I("n"), R("x")},
      .constraints = {n_ge0, x_ne1},
      .grid = grid({{"n", ints(0, 30)}, {"x", small}}),
      .cost = CostClass::QuadraticVsConstant,
      .scale_param = "n",
      .bench_point = {{"x", Q(2)}},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        const Q& x = p.q("x");
        return nested(c, n, [&](long k, long j) { return pw(x, k) * C(n, j); });
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        const Q& x = p.q("x");
        return (pw(Q(1) + x, n) - pw(Q(2), n) * pw(x, n + 1)) / (Q(1) - x);
      },
  });

  out.push_back({
      .id = "C3.4-2",
      .citation = "Corollary 3.4",
      .statement = "sum_{k=0}^{n} x^k sum_{j=0}^{k} C(n,j) (-1)^j = (1-x)^{n-1}",
      .note = "Holds for n >= 1; at n = 0 the left side is 1 and the right side 1/(1-x).",
      .mode = Mode::ExactRational,
      .params = {I("n"), R("x")},
      .constraints = {at_least("n", 1)},
      .grid = grid({{"n", ints(0, 30)}, {"x", small}}),
      .cost = CostClass::QuadraticVsConstant,
      .scale_param = "n",
      .bench_point = {{"x", Q(2)}},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        const Q& x = p.q("x");
        return nested(c, n, [&](long k, long j) { return pw(x, k) * C(n, j) * sgn(j); });
      },
      .rhs = [](const Point& p, Ctx&) -> Value { return pw(Q(1) - p.q("x"), p.i("n") - 1); },
  });

  out.push_back({
      .id = "C3.4-3",
      .citation = "Corollary 3.4",
      .statement = "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) y^j = n (1+y)^{n-1} + (1+y)^n",
      .note = "The x -> 1 limit of the master identity, kept as its own entry.",
      .mode = Mode::ExactRational,
      .params = {I("n"), R("y")},
      .constraints = {n_ge0, rule("n >= 1 or y != -1", [](const Point& p) { return p.i("n") >= 1 || p.q("y") != Q(-1); })},
      .grid = grid({{"n", ints(0, 30)}, {"y", small}}),
      .cost = CostClass::QuadraticVsConstant,
      .scale_param = "n",
      .bench_point = {{"y", Q(3)}},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        const Q& y = p.q("y");
        return nested(c, n, [&](long, long j) { return C(n, j) * pw(y, j); });
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        const Q y1 = Q(1) + p.q("y");
        return Q(n) * pw(y1, n - 1) + pw(y1, n);
      },
  });

  out.push_back({
      .id = "C3.4-4",
      .citation = "Corollary 3.4",
      .statement = "sum_{k=0}^{n} (-1)^k sum_{j=0}^{k} C(n,j) y^j = ((1-y)^n + (-1)^n (1+y)^n) / 2",
      .mode = Mode::ExactRational,
      .params = {I("n"), R("y")},
      .constraints = {n_ge0},
      .grid = grid({{"n", ints(0, 30)}, {"y", small}}),
      .cost = CostClass::QuadraticVsConstant,
      .scale_param = "n",
      .bench_point = {{"y", Q(3)}},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        const Q& y = p.q("y");
        return nested(c, n, [&](long k, long j) { return C(n, j) * pw(y, j) * sgn(k); });
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        const Q& y = p.q("y");
        return (pw(Q(1) - y, n) + Q(sgn(n)) * pw(Q(1) + y, n)) / Q(2);
      },
  });

  out.push_back({
      .id = "C3.4-5",
      .citation = "Corollary 3.4",
      .statement = "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) x^{k-j} = (2^n - x (1+x)^n) / (1-x)",
      .mode = Mode::ExactRational,
      .params = {I("n"), R("x")},
      .constraints = {n_ge0, x_ne1},
      .grid = grid({{"n", ints(0, 30)}, {"x", small}}),
      .cost = CostClass::QuadraticVsConstant,
      .scale_param = "n",
      .bench_point = {{"x", Q(2)}},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        const Q& x = p.q("x");
        return nested(c, n, [&](long k, long j) { return C(n, j) * pw(x, k - j); });
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        const Q& x = p.q("x");
        return (pw(Q(2), n) - x * pw(Q(1) + x, n)) / (Q(1) - x);
      },
  });

  out.push_back({
      .id = "C3.4-6",
      .citation = "Corollary 3.4",
      .statement = "sum_{k=0}^{n} sum_{j=0}^{k} C(n,j) (-1)^j y^{n+j-k} = (1-y)^{n-1}",
      .note = "Holds for n >= 1.",
      .mode = Mode::ExactRational,
      .params = {I("n"), R("y")},
      .constraints = {at_least("n", 1)},
      .grid = grid({{"n", ints(0, 30)}, {"y", small}}),
      .cost = CostClass::QuadraticVsConstant,
      .scale_param = "n",
      .bench_point = {{"y", Q(3)}},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        const Q& y = p.q("y");
        return nested(c, n, [&](long k, long j) { return C(n, j) * sgn(j) * pw(y, n + j - k); });
      },
      .rhs = [](const Point& p, Ctx&) -> Value { return pw(Q(1) - p.q("y"), p.i("n") - 1); },
  });

  // Sums weighted by 1/j.
  out.push_back({
      .id = "C3.5-1",
      .citation = "Corollary 3.5",
      .statement = "sum_{k=1}^{n} x^k sum_{j=1}^{k} C(n,j) y^j / j = (1/(1-x)) sum_{k=1}^{n} C(n,k) (y^k / k) (x^k - x^{n+1})",
      .mode = Mode::ExactRational,
      .params = {I("n"), R("x"), R("y")},
      .constraints = {n_ge0, x_ne1},
      .grid = grid({{"n", ints(0, 12)}, {"x", small}, {"y", small}}),
      .cost = CostClass::QuadraticVsLinear,
      .scale_param = "n",
      .bench_point = {{"x", Q(2)}, {"y", Q(3)}},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        const Q& x = p.q("x");
        const Q& y = p.q("y");
        Q s;
        for (long k = 1; k <= n; ++k) {
          for (long j = 1; j <= k; ++j) {
            s += pw(x, k) * C(n, j) * pw(y, j) / Q(j);
            c.term();
          }
        }
        return s;
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        const Q& x = p.q("x");
        const Q& y = p.q("y");
        Q s;
        for (long k = 1; k <= n; ++k) s += C(n, k) * pw(y, k) / Q(k) * (pw(x, k) - pw(x, n + 1));
        return s / (Q(1) - x);
      },
  });

  out.push_back({
      .id = "C3.5-2",
      .citation = "Corollary 3.5",
      .statement = "sum_{k=1}^{n} x^k sum_{j=1}^{k} C(n,j) y^j / j = (1/(1-x)) sum_{k=1}^{n} ((1+xy)^k - x^{n+1} (1+y)^k) / k"
                   " - H_n (1 - x^{n+1}) / (1-x)",
      .mode = Mode::ExactRational,
      .params = {I("n"), R("x"), R("y")},
      .constraints = {n_ge0, x_ne1},
      .grid = grid({{"n", ints(0, 12)}, {"x", small}, {"y", small}}),
      .cost = CostClass::QuadraticVsLinear,
      .scale_param = "n",
      .bench_point = {{"x", Q(2)}, {"y", Q(3)}},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        const Q& x = p.q("x");
        const Q& y = p.q("y");
        Q s;
        for (long k = 1; k <= n; ++k) {
          for (long j = 1; j <= k; ++j) {
            s += pw(x, k) * C(n, j) * pw(y, j) / Q(j);
            c.term();
          }
        }
        return s;
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        const Q& x = p.q("x");
        const Q& y = p.q("y");
        const Q xn1 = pw(x, n + 1);
        Q s;
        for (long k = 1; k <= n; ++k) s += (pw(Q(1) + x * y, k) - xn1 * pw(Q(1) + y, k)) / Q(k);
        return s / (Q(1) - x) - H(n) * (Q(1) - xn1) / (Q(1) - x);
      },
  });

  out.push_back({
      .id = "C3.5-3",
      .citation = "Corollary 3.5",
      .statement = "sum_{k=1}^{n} sum_{j=1}^{k} C(n,j) y^j / j = (n+1) sum_{k=1}^{n} (1+y)^k / k + 1 - (1+y)^n - (n+1) H_n",
      .mode = Mode::ExactRational,
      .params = {I("n"), R("y")},
      .constraints = {n_ge0},
      .grid = grid({{"n", ints(0, 30)}, {"y", small}}),
      .cost = CostClass::QuadraticVsLinear,
      .scale_param = "n",
      .bench_point = {{"y", Q(3)}},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        const Q& y = p.q("y");
        Q s;
        for (long k = 1; k <= n; ++k) {
          for (long j = 1; j <= k; ++j) {
            s += C(n, j) * pw(y, j) / Q(j);
            c.term();
          }
        }
        return s;
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        const Q y1 = Q(1) + p.q("y");
        Q s;
        for (long k = 1; k <= n; ++k) s += pw(y1, k) / Q(k);
        return Q(n + 1) * s + Q(1) - pw(y1, n) - Q(n + 1) * H(n);
      },
  });

  out.push_back({
      .id = "C3.5-4",
      .citation = "Corollary 3.5, recorded evaluation",
      .statement = "sum_{k=1}^{n} sum_{j=1}^{k} C(n,j) (-1)^j / j = 1 - (n+1) H_n",
      .note = "Holds for n >= 1; at n = 0 the left side is the empty sum 0.",
      .mode = Mode::ExactRational,
      .params = {I("n")},
      .constraints = {at_least("n", 1)},
      .grid = grid({{"n", ints(0, 30)}}),
      .cost = CostClass::QuadraticVsLinear,
      .scale_param = "n",
      .bench_point = {},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        Q s;
        for (long k = 1; k <= n; ++k) {
          for (long j = 1; j <= k; ++j) {
            s += C(n, j) * frac(sgn(j), j);
            c.term();
          }
        }
        return s;
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        return Q(1) - Q(n + 1) * H(n);
      },
  });

  out.push_back({
      .id = "C3.5-5",
      .citation = "Corollary 3.5, recorded evaluation",
      .statement = "sum_{k=1}^{n} sum_{j=1}^{k} C(n,j) / j = (n+1) sum_{k=1}^{n} 2^k / k + 1 - 2^n - (n+1) H_n",
      .mode = Mode::ExactRational,
      .params = {I("n")},
      .constraints = {n_ge0},
      .grid = grid({{"n", ints(0, 30)}}),
      .cost = CostClass::QuadraticVsLinear,
      .scale_param = "n",
      .bench_point = {},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        Q s;
        for (long k = 1; k <= n; ++k) {
          for (long j = 1; j <= k; ++j) {
            s += C(n, j) / Q(j);
            c.term();
          }
        }
        return s;
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        Q s;
        for (long k = 1; k <= n; ++k) s += pw(Q(2), k) / Q(k);
        return Q(n + 1) * s + Q(1) - pw(Q(2), n) - Q(n + 1) * H(n);
      },
  });

  // Sums weighted by x^k / k.
  out.push_back({
      .id = "C3.6-1",
      .citation = "Corollary 3.6",
      .statement = "sum_{k=1}^{n} (x^k / k) sum_{j=0}^{k} C(n,j) y^j = (1+y)^n sum_{m=1}^{n} x^m / m"
                   " - sum_{k=1}^{n} C(n,k) y^k sum_{m=1}^{k-1} x^m / m",
      .mode = Mode::ExactRational,
      .params = {I("n"), R("x"), R("y")},
      .constraints = {n_ge0},
      .grid = grid({{"n", ints(0, 12)}, {"x", small}, {"y", small}}),
      .cost = CostClass::QuadraticVsLinear,
      .scale_param = "n",
      .bench_point = {{"x", Q(2)}, {"y", Q(3)}},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        const Q& x = p.q("x");
        const Q& y = p.q("y");
        Q s;
        for (long k = 1; k <= n; ++k) {
          for (long j = 0; j <= k; ++j) {
            s += pw(x, k) / Q(k) * C(n, j) * pw(y, j);
            c.term();
          }
        }
        return s;
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        const Q& x = p.q("x");
        const Q& y = p.q("y");
        // partial[k] = Σ_{m=1}^{k} x^m/m
        std::vector<Q> partial(n + 1);
        for (long m = 1; m <= n; ++m) partial[m] = partial[m - 1] + pw(x, m) / Q(m);
        Q s = pw(Q(1) + y, n) * partial[n];
        for (long k = 1; k <= n; ++k) s -= C(n, k) * pw(y, k) * partial[k - 1];
        return s;
      },
  });

  out.push_back({
      .id = "C3.6-2",
      .citation = "Corollary 3.6",
      .statement = "sum_{k=1}^{n} (1/k) sum_{j=0}^{k} C(n,j) y^j = H_n (1+y)^n - sum_{k=1}^{n} C(n,k) y^k H_{k-1}",
      .mode = Mode::ExactRational,
      .params = {I("n"), R("y")},
      .constraints = {n_ge0},
      .grid = grid({{"n", ints(0, 30)}, {"y", small}}),
      .cost = CostClass::QuadraticVsLinear,
      .scale_param = "n",
      .bench_point = {{"y", Q(3)}},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        const Q& y = p.q("y");
        Q s;
        for (long k = 1; k <= n; ++k) {
          for (long j = 0; j <= k; ++j) {
            s += C(n, j) * pw(y, j) / Q(k);
            c.term();
          }
        }
        return s;
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        const Q& y = p.q("y");
        Q s = H(n) * pw(Q(1) + y, n);
        for (long k = 1; k <= n; ++k) s -= C(n, k) * pw(y, k) * H(k - 1);
        return s;
      },
  });

  out.push_back({
      .id = "C3.6-3",
      .citation = "Corollary 3.6",
      .statement = "sum_{k=1}^{n} (1/k) sum_{j=0}^{k} C(n,j) = 2^n H_n - sum_{k=1}^{n} C(n,k) H_{k-1}",
      .mode = Mode::ExactRational,
      .params = {I("n")},
      .constraints = {n_ge0},
      .grid = grid({{"n", ints(0, 30)}}),
      .cost = CostClass::QuadraticVsLinear,
      .scale_param = "n",
      .bench_point = {},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        Q s;
        for (long k = 1; k <= n; ++k) {
          for (long j = 0; j <= k; ++j) {
            s += C(n, j) / Q(k);
            c.term();
          }
        }
        return s;
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        Q s = pw(Q(2), n) * H(n);
        for (long k = 1; k <= n; ++k) s -= C(n, k) * H(k - 1);
        return s;
      },
  });

  out.push_back({
      .id = "C3.6-4",
      .citation = "Corollary 3.6, recorded evaluation",
      .statement = "sum_{k=1}^{n} (1/k) sum_{j=0}^{k} C(n,j) (-1)^j = 1/n - H_n",
      .mode = Mode::ExactRational,
      .params = {I("n")},
      .constraints = {at_least("n", 1)},
      .grid = grid({{"n", ints(0, 30)}}),
      .cost = CostClass::QuadraticVsLinear,
      .scale_param = "n",
      .bench_point = {},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        Q s;
        for (long k = 1; k <= n; ++k) {
          for (long j = 0; j <= k; ++j) {
            s += C(n, j) * frac(sgn(j), k);
            c.term();
          }
        }
        return s;
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        return frac(1, n) - H(n);
      },
  });

  // j-weighted inner sums.
  out.push_back({
      .id = "C3.7-1",
      .citation = "Corollary 3.7",
      .statement = "sum_{k=0}^{n} x^k sum_{j=1}^{k} j C(n,j) y^j = (n x y / (1-x)) ((1+xy)^{n-1} - x^n (1+y)^{n-1})",
      .mode = Mode::ExactRational,
      .params = {I("n"), R("x"), R("y")},
      .constraints = {n_ge0, x_ne1,
                      rule("n >= 1 or (x*y != -1 and y != -1)",
                           [](const Point& p) {
                             return p.i("n") >= 1 || (p.q("x") * p.q("y") != Q(-1) && p.q("y") != Q(-1));
                           })},
      .grid = grid({{"n", ints(0, 12)}, {"x", small}, {"y", small}}),
      .cost = CostClass::QuadraticVsConstant,
      .scale_param = "n",
      .bench_point = {{"x", Q(2)}, {"y", Q(3)}},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        const Q& x = p.q("x");
        const Q& y = p.q("y");
        Q s;
        for (long k = 0; k <= n; ++k) {
          for (long j = 1; j <= k; ++j) {
            s += pw(x, k) * Q(j) * C(n, j) * pw(y, j);
            c.term();
          }
        }
        return s;
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        const Q& x = p.q("x");
        const Q& y = p.q("y");
        return Q(n) * x * y / (Q(1) - x) * (pw(Q(1) + x * y, n - 1) - pw(x, n) * pw(Q(1) + y, n - 1));
      },
  });

  out.push_back({
      .id = "C3.7-2",
      .citation = "Corollary 3.7",
      .statement = "sum_{k=0}^{n} x^k sum_{j=1}^{k} j C(n,j) = (n x / (1-x)) ((1+x)^{n-1} - 2^{n-1} x^n)",
      .mode = Mode::ExactRational,
      .params = {I("n"), R("x")},
      .constraints = {n_ge0, x_ne1,
                      rule("n >= 1 or x != -1", [](const Point& p) { return p.i("n") >= 1 || p.q("x") != Q(-1); })},
      .grid = grid({{"n", ints(0, 30)}, {"x", small}}),
      .cost = CostClass::QuadraticVsConstant,
      .scale_param = "n",
      .bench_point = {{"x", Q(2)}},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        const Q& x = p.q("x");
        Q s;
        for (long k = 0; k <= n; ++k) {
          for (long j = 1; j <= k; ++j) {
            s += pw(x, k) * Q(j) * C(n, j);
            c.term();
          }
        }
        return s;
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        const Q& x = p.q("x");
        return Q(n) * x / (Q(1) - x) * (pw(Q(1) + x, n - 1) - pw(Q(2), n - 1) * pw(x, n));
      },
  });

  out.push_back({
      .id = "C3.7-3",
      .citation = "Corollary 3.7",
      .statement = "sum_{k=0}^{n} x^k sum_{j=1}^{k} (-1)^j j C(n,j) = -n x (1-x)^{n-2}",
      .mode = Mode::ExactRational,
      .params = {I("n"), R("x")},
      .constraints = {at_least("n", 2)},
      .grid = grid({{"n", ints(0, 30)}, {"x", small}}),
      .cost = CostClass::QuadraticVsConstant,
      .scale_param = "n",
      .bench_point = {{"x", Q(2)}},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        const Q& x = p.q("x");
        Q s;
        for (long k = 0; k <= n; ++k) {
          for (long j = 1; j <= k; ++j) {
            s += pw(x, k) * Q(sgn(j) * j) * C(n, j);
            c.term();
          }
        }
        return s;
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        const Q& x = p.q("x");
        return -Q(n) * x * pw(Q(1) - x, n - 2);
      },
  });

  out.push_back({
      .id = "R3.2-1",
      .citation = "Remark 3.2, first step",
      .statement = "sum_{j=1}^{k} (-1)^j j C(n,j) = (-1)^k n C(n-2,k-1)",
      .mode = Mode::ExactRational,
      .params = {I("n"), I("k")},
      .constraints = {at_least("n", 2), at_least("k", 0)},
      .grid = grid({{"n", ints(0, 30)}, {"k", ints(0, 32)}}),
      .cost = CostClass::LinearVsConstant,
      .scale_param = "k",
      .bench_point = {{"n", Q(2000)}},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        const long k = p.i("k");
        Q s;
        for (long j = 1; j <= k; ++j) {
          s += Q(sgn(j) * j) * C(n, j);
          c.term();
        }
        return s;
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        const long k = p.i("k");
        return Q(sgn(k) * n) * C(n - 2, k - 1);
      },
  });

  out.push_back({
      .id = "R3.2-2",
      .citation = "Remark 3.2, second step",
      .statement = "sum_{k=1}^{n-1} (-1)^k n C(n-2,k-1) x^k = -n x (1-x)^{n-2}",
      .mode = Mode::ExactRational,
      .params = {I("n"), R("x")},
      .constraints = {at_least("n", 2)},
      .grid = grid({{"n", ints(0, 30)}, {"x", small}}),
      .cost = CostClass::LinearVsConstant,
      .scale_param = "n",
      .bench_point = {{"x", Q(2)}},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        const Q& x = p.q("x");
        Q s;
        for (long k = 1; k <= n - 1; ++k) {
          s += Q(sgn(k) * n) * C(n - 2, k - 1) * pw(x, k);
          c.term();
        }
        return s;
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        const Q& x = p.q("x");
        return -Q(n) * x * pw(Q(1) - x, n - 2);
      },
  });

  out.push_back({
      .id = "R3.3",
      .citation = "Remark 3.3",
      .statement = "sum_{k=1}^{n} (1/k) sum_{j=0}^{k} C(n,j) = sum_{k=1}^{n} (2^{n-k} + C(n,k)) / k",
      .mode = Mode::ExactRational,
      .params = {I("n")},
      .constraints = {n_ge0},
      .grid = grid({{"n", ints(0, 30)}}),
      .cost = CostClass::QuadraticVsLinear,
      .scale_param = "n",
      .bench_point = {},
      .lhs = [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        Q s;
        for (long k = 1; k <= n; ++k) {
          for (long j = 0; j <= k; ++j) {
            s += C(n, j) / Q(k);
            c.term();
          }
        }
        return s;
      },
      .rhs = [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        Q s;
        for (long k = 1; k <= n; ++k) s += (pw(Q(2), n - k) + C(n, k)) / Q(k);
        return s;
      },
  });
}

}  // namespace dsum::detail
