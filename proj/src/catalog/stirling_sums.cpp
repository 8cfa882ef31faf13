#include "dsl.hpp"
#include "registry.hpp"

namespace dsum::detail {

namespace {

/// Σ_{k=lo}^{hi} (-1)^k a(k) / k
template <class A>
Q alt_harmonic_weighted(long lo, long hi, A a) {
  Q s;
  for (long k = lo; k <= hi; ++k) s += frac(sgn(k), k) * a(k);
  return s;
}

}  // namespace

void register_stirling(std::vector<IdentityDescriptor>& out) {
  const auto n_ge0 = at_least("n", 0);
  const auto m_ge0 = at_least("m", 0);

  // Finite differences of powers.
  out.push_back(entry(
      "S7.1a", "Lemma 7.1", "sum_{p=0}^{k} (-1)^p C(k,p) p^r = (-1)^k k! S(r,k)", Mode::ExactRational, {I("r"), I("k")},
      {at_least("r", 0), at_least("k", 0)}, grid({{"r", ints(0, 14)}, {"k", ints(0, 12)}}), CostClass::LinearVsConstant,
      "k", {{"r", Q(12)}},
      [](const Point& p, Ctx& c) -> Value {
        const long r = p.i("r"), k = p.i("k");
        Q s;
        for (long i = 0; i <= k; ++i) {
          s += Q(sgn(i)) * C(k, i) * pw(Q(i), r);
          c.term();
        }
        return s;
      },
      [](const Point& p, Ctx&) -> Value {
        const long r = p.i("r"), k = p.i("k");
        return Q(sgn(k)) * fact(k) * S2(r, k);
      }));
  out.push_back(entry(
      "S7.1b", "Lemma 7.1", "sum_{p=0}^{k} (-1)^p C(k,p) (v+p)^r = (-1)^k k! {r+v, k+v}_v", Mode::ExactRational,
      {I("v"), I("r"), I("k")}, {at_least("v", 0), at_least("r", 0), at_least("k", 0)},
      grid({{"v", ints(0, 6)}, {"r", ints(0, 10)}, {"k", ints(0, 8)}}), CostClass::LinearVsConstant, "k",
      {{"v", Q(2)}, {"r", Q(12)}},
      [](const Point& p, Ctx& c) -> Value {
        const long v = p.i("v"), r = p.i("r"), k = p.i("k");
        Q s;
        for (long i = 0; i <= k; ++i) {
          s += Q(sgn(i)) * C(k, i) * pw(Q(v + i), r);
          c.term();
        }
        return s;
      },
      [](const Point& p, Ctx&) -> Value {
        const long v = p.i("v"), r = p.i("r"), k = p.i("k");
        return Q(sgn(k)) * fact(k) * RS(r + v, k + v, v);
      }));

  // Alternating double sums.
  out.push_back(entry(
      "S7.2a", "Proposition 7.2",
      "sum_{k=0}^{n} sum_{j=0}^{k} (-1)^k C(n,j) {m+s, n+j-k+r+s}_s (n+j-k+r)! = (-1)^n r! {m+n+s-1, r+n+s-1}_{n+s-1}",
      Mode::ExactRational, {I("m"), I("n"), I("r"), I("s")},
      {m_ge0, at_least("n", 1), at_least("r", 0), at_least("s", 0)},
      grid({{"m", ints(0, 6)}, {"n", ints(0, 10)}, {"r", ints(0, 3)}, {"s", ints(0, 3)}}), CostClass::QuadraticVsConstant,
      "n", {{"m", Q(5)}, {"r", Q(1)}, {"s", Q(1)}},
      [](const Point& p, Ctx& c) -> Value {
        const long m = p.i("m"), n = p.i("n"), r = p.i("r"), s = p.i("s");
        return nested(c, n, [&](long k, long j) {
          const long d = n + j - k;
          return Q(sgn(k)) * C(n, j) * RS(m + s, d + r + s, s) * fact(d + r);
        });
      },
      [](const Point& p, Ctx&) -> Value {
        const long m = p.i("m"), n = p.i("n"), r = p.i("r"), s = p.i("s");
        return Q(sgn(n)) * fact(r) * RS(m + n + s - 1, r + n + s - 1, n + s - 1);
      }));
  out.push_back(entry(
      "S7.2b", "Proposition 7.2",
      "sum_{k=0}^{n} sum_{j=0}^{k} (-1)^k C(n,j) S(m, n+j-k) (n+j-k)! = (-1)^n (n-1)^m", Mode::ExactRational,
      {I("m"), I("n")}, {m_ge0, at_least("n", 1)}, grid({{"m", ints(0, 10)}, {"n", ints(0, 16)}}),
      CostClass::QuadraticVsConstant, "n", {{"m", Q(5)}},
      [](const Point& p, Ctx& c) -> Value {
        const long m = p.i("m"), n = p.i("n");
        return nested(c, n, [&](long k, long j) {
          const long d = n + j - k;
          return Q(sgn(k)) * C(n, j) * S2(m, d) * fact(d);
        });
      },
      [](const Point& p, Ctx&) -> Value {
        const long m = p.i("m"), n = p.i("n");
        return Q(sgn(n)) * pw(Q(n - 1), m);
      }));

  // Weights (-1)^j / j on the inner index.
  out.push_back(entry(
      "S7.3a", "Proposition 7.3",
      "sum_{k=1}^{n} (-1)^{k+r} (k+r)! {m+s, k+r+s}_s sum_{j=1}^{k} ((-1)^{j+u} / j) C(n,j) {m+v, j+u+v}_v (j+u)! ="
      " (-1)^u sum_{k=1}^{n} ((-1)^k / k) C(n,k) (k+u)! {m+v, k+u+v}_v ((-1)^{k+r} (k+r)! {m+s-1, k+r+s-1}_{s-1}"
      " - (-1)^{n+r+1} (n+r+1)! {m+s-1, n+r+s}_{s-1})",
      Mode::ExactRational, {I("m"), I("n"), I("r"), I("s"), I("u"), I("v")},
      {m_ge0, n_ge0, at_least("r", 0), at_least("s", 1), at_least("u", 0), at_least("v", 0)},
      grid({{"m", ints(0, 4)}, {"n", ints(0, 7)}, {"r", ints(0, 2)}, {"s", ints(1, 3)}, {"u", ints(0, 2)}, {"v", ints(0, 2)}}),
      CostClass::QuadraticVsLinear, "n", {{"m", Q(4)}, {"r", Q(1)}, {"s", Q(1)}, {"u", Q(1)}, {"v", Q(1)}},
      [](const Point& p, Ctx& c) -> Value {
        const long m = p.i("m"), n = p.i("n"), r = p.i("r"), s = p.i("s"), u = p.i("u"), v = p.i("v");
        Q total;
        for (long k = 1; k <= n; ++k) {
          Q inner;
          for (long j = 1; j <= k; ++j) {
            inner += frac(sgn(j + u), j) * C(n, j) * RS(m + v, j + u + v, v) * fact(j + u);
            c.term();
          }
          total += Q(sgn(k + r)) * fact(k + r) * RS(m + s, k + r + s, s) * inner;
        }
        return total;
      },
      [](const Point& p, Ctx&) -> Value {
        const long m = p.i("m"), n = p.i("n"), r = p.i("r"), s = p.i("s"), u = p.i("u"), v = p.i("v");
        const Q tail = Q(sgn(n + r + 1)) * fact(n + r + 1) * RS(m + s - 1, n + r + s, s - 1);
        Q total;
        for (long k = 1; k <= n; ++k) {
          total += frac(sgn(k), k) * C(n, k) * fact(k + u) * RS(m + v, k + u + v, v) *
                   (Q(sgn(k + r)) * fact(k + r) * RS(m + s - 1, k + r + s - 1, s - 1) - tail);
        }
        return Q(sgn(u)) * total;
      },
      "The outer weight is (-1)^{k+r} (k+r)!."));
  out.push_back(entry(
      "S7.3b", "Proposition 7.3",
      "sum_{k=1}^{n} (-1)^k k! S(m+1,k+1) sum_{j=1}^{k} ((-1)^j / j) C(n,j) S(m,j) j! = sum_{k=1}^{n} ((-1)^k / k)"
      " C(n,k) S(m,k) k! ((-1)^k k! S(m,k) - (-1)^{n+1} (n+1)! S(m,n+1))",
      Mode::ExactRational, {I("m"), I("n")}, {m_ge0, n_ge0}, grid({{"m", ints(0, 8)}, {"n", ints(0, 14)}}),
      CostClass::QuadraticVsLinear, "n", {{"m", Q(6)}},
      [](const Point& p, Ctx& c) -> Value {
        const long m = p.i("m"), n = p.i("n");
        Q total;
        for (long k = 1; k <= n; ++k) {
          Q inner;
          for (long j = 1; j <= k; ++j) {
            inner += frac(sgn(j), j) * C(n, j) * S2(m, j) * fact(j);
            c.term();
          }
          total += Q(sgn(k)) * fact(k) * S2(m + 1, k + 1) * inner;
        }
        return total;
      },
      [](const Point& p, Ctx&) -> Value {
        const long m = p.i("m"), n = p.i("n");
        const Q tail = Q(sgn(n + 1)) * fact(n + 1) * S2(m, n + 1);
        return alt_harmonic_weighted(1, n, [&](long k) {
          return C(n, k) * S2(m, k) * fact(k) * (Q(sgn(k)) * fact(k) * S2(m, k) - tail);
        });
      }));
  out.push_back(entry(
      "S7.3c", "Proposition 7.3",
      "sum_{k=1}^{n} (-1)^k k! S(n+1,k+1) sum_{j=1}^{k} ((-1)^j / j) C(n,j) S(n,j) j! = sum_{k=1}^{n} (1/k) C(n,k)"
      " S(n,k)^2 k!^2",
      Mode::ExactRational, {I("n")}, {n_ge0}, grid({{"n", ints(0, 25)}}), CostClass::QuadraticVsLinear, "n", {},
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        Q total;
        for (long k = 1; k <= n; ++k) {
          Q inner;
          for (long j = 1; j <= k; ++j) {
            inner += frac(sgn(j), j) * C(n, j) * S2(n, j) * fact(j);
            c.term();
          }
          total += Q(sgn(k)) * fact(k) * S2(n + 1, k + 1) * inner;
        }
        return total;
      },
      [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        Q total;
        for (long k = 1; k <= n; ++k) total += C(n, k) * pw(S2(n, k) * fact(k), 2) / Q(k);
        return total;
      }));

  // Weights (-1)^k / k on the outer index.
  out.push_back(entry(
      "S7.4a", "Proposition 7.4",
      "sum_{k=1}^{n} ((-1)^k / k) {m+s, k+r+s}_s (k+r)! sum_{j=0}^{k} C(n,j) {m+v, j+u+v}_v (j+u)! ="
      " u! {m+n+v, u+n+v}_{n+v} sum_{k=1}^{n} ((-1)^k / k) {m+s, k+r+s}_s (k+r)!"
      " - sum_{k=1}^{n} C(n,k) {m+v, k+u+v}_v (k+u)! sum_{j=1}^{k-1} ((-1)^j / j) {m+s, j+r+s}_s (j+r)!",
      Mode::ExactRational, {I("m"), I("n"), I("r"), I("s"), I("u"), I("v")},
      {m_ge0, n_ge0, at_least("r", 0), at_least("s", 0), at_least("u", 0), at_least("v", 0)},
      grid({{"m", ints(0, 4)}, {"n", ints(0, 7)}, {"r", ints(0, 2)}, {"s", ints(0, 2)}, {"u", ints(0, 2)}, {"v", ints(0, 2)}}),
      CostClass::QuadraticVsLinear, "n", {{"m", Q(4)}, {"r", Q(1)}, {"s", Q(1)}, {"u", Q(1)}, {"v", Q(1)}},
      [](const Point& p, Ctx& c) -> Value {
        const long m = p.i("m"), n = p.i("n"), r = p.i("r"), s = p.i("s"), u = p.i("u"), v = p.i("v");
        Q total;
        for (long k = 1; k <= n; ++k) {
          Q inner;
          for (long j = 0; j <= k; ++j) {
            inner += C(n, j) * RS(m + v, j + u + v, v) * fact(j + u);
            c.term();
          }
          total += frac(sgn(k), k) * RS(m + s, k + r + s, s) * fact(k + r) * inner;
        }
        return total;
      },
      [](const Point& p, Ctx&) -> Value {
        const long m = p.i("m"), n = p.i("n"), r = p.i("r"), s = p.i("s"), u = p.i("u"), v = p.i("v");
        auto a = [&](long k) { return RS(m + s, k + r + s, s) * fact(k + r); };
        Q total = fact(u) * RS(m + n + v, u + n + v, n + v) * alt_harmonic_weighted(1, n, a);
        Q partial;  // Σ_{j=1}^{k-1}
        for (long k = 1; k <= n; ++k) {
          total -= C(n, k) * RS(m + v, k + u + v, v) * fact(k + u) * partial;
          partial += frac(sgn(k), k) * a(k);
        }
        return total;
      }));
  out.push_back(entry(
      "S7.4b", "Proposition 7.4",
      "sum_{k=1}^{n} ((-1)^k / k) S(m,k+r) (k+r)! sum_{j=0}^{k} C(n,j) S(m,j+u) (j+u)! = u! {m+n, u+n}_n sum_{k=1}^{n}"
      " ((-1)^k / k) S(m,k+r) (k+r)! - sum_{k=1}^{n} C(n,k) S(m,k+u) (k+u)! sum_{j=1}^{k-1} ((-1)^j / j) S(m,j+r) (j+r)!",
      Mode::ExactRational, {I("m"), I("n"), I("r"), I("u")}, {m_ge0, n_ge0, at_least("r", 0), at_least("u", 0)},
      grid({{"m", ints(0, 6)}, {"n", ints(0, 10)}, {"r", ints(0, 3)}, {"u", ints(0, 3)}}), CostClass::QuadraticVsLinear,
      "n", {{"m", Q(5)}, {"r", Q(1)}, {"u", Q(1)}},
      [](const Point& p, Ctx& c) -> Value {
        const long m = p.i("m"), n = p.i("n"), r = p.i("r"), u = p.i("u");
        Q total;
        for (long k = 1; k <= n; ++k) {
          Q inner;
          for (long j = 0; j <= k; ++j) {
            inner += C(n, j) * S2(m, j + u) * fact(j + u);
            c.term();
          }
          total += frac(sgn(k), k) * S2(m, k + r) * fact(k + r) * inner;
        }
        return total;
      },
      [](const Point& p, Ctx&) -> Value {
        const long m = p.i("m"), n = p.i("n"), r = p.i("r"), u = p.i("u");
        auto a = [&](long k) { return S2(m, k + r) * fact(k + r); };
        Q total = fact(u) * RS(m + n, u + n, n) * alt_harmonic_weighted(1, n, a);
        Q partial;
        for (long k = 1; k <= n; ++k) {
          total -= C(n, k) * S2(m, k + u) * fact(k + u) * partial;
          partial += frac(sgn(k), k) * a(k);
        }
        return total;
      },
      "The subtracted sum uses S(m, k+u)."));
  out.push_back(entry(
      "S7.4c", "Proposition 7.4",
      "sum_{k=1}^{n} ((-1)^k / k) S(m+1,k+r+1) (k+r)! sum_{j=0}^{k} C(n,j) S(m+1,j+u+1) (j+u)! = u! {m+n+1, u+n+1}_{n+1}"
      " sum_{k=1}^{n} ((-1)^k / k) S(m+1,k+r+1) (k+r)! - sum_{k=1}^{n} C(n,k) S(m+1,k+u+1) (k+u)! sum_{j=1}^{k-1}"
      " ((-1)^j / j) S(m+1,j+r+1) (j+r)!",
      Mode::ExactRational, {I("m"), I("n"), I("r"), I("u")}, {m_ge0, n_ge0, at_least("r", 0), at_least("u", 0)},
      grid({{"m", ints(0, 6)}, {"n", ints(0, 10)}, {"r", ints(0, 3)}, {"u", ints(0, 3)}}), CostClass::QuadraticVsLinear,
      "n", {{"m", Q(5)}, {"r", Q(1)}, {"u", Q(1)}},
      [](const Point& p, Ctx& c) -> Value {
        const long m = p.i("m"), n = p.i("n"), r = p.i("r"), u = p.i("u");
        Q total;
        for (long k = 1; k <= n; ++k) {
          Q inner;
          for (long j = 0; j <= k; ++j) {
            inner += C(n, j) * S2(m + 1, j + u + 1) * fact(j + u);
            c.term();
          }
          total += frac(sgn(k), k) * S2(m + 1, k + r + 1) * fact(k + r) * inner;
        }
        return total;
      },
      [](const Point& p, Ctx&) -> Value {
        const long m = p.i("m"), n = p.i("n"), r = p.i("r"), u = p.i("u");
        auto a = [&](long k) { return S2(m + 1, k + r + 1) * fact(k + r); };
        Q total = fact(u) * RS(m + n + 1, u + n + 1, n + 1) * alt_harmonic_weighted(1, n, a);
        Q partial;
        for (long k = 1; k <= n; ++k) {
          total -= C(n, k) * S2(m + 1, k + u + 1) * fact(k + u) * partial;
          partial += frac(sgn(k), k) * a(k);
        }
        return total;
      }));
  struct PowerCase {
    const char* id;
    const char* statement;
    long lift;  // 0: S(m, .), 1: S(m+1, .+1)
  };
  const PowerCase power_cases[] = {
      {"S7.4d",
       "sum_{k=1}^{n} ((-1)^k / k) S(m,k) k! sum_{j=0}^{k} C(n,j) S(m,j) j! = n^m sum_{k=1}^{n} ((-1)^k / k) S(m,k) k!"
       " - sum_{k=1}^{n} C(n,k) S(m,k) k! sum_{j=1}^{k-1} ((-1)^j / j) S(m,j) j!",
       0},
      {"S7.4e",
       "sum_{k=1}^{n} ((-1)^k / k) S(m+1,k+1) k! sum_{j=0}^{k} C(n,j) S(m+1,j+1) j! = (n+1)^m sum_{k=1}^{n} ((-1)^k / k)"
       " S(m+1,k+1) k! - sum_{k=1}^{n} C(n,k) S(m+1,k+1) k! sum_{j=1}^{k-1} ((-1)^j / j) S(m+1,j+1) j!",
       1},
  };
  for (const auto& pc : power_cases) {
    const long lift = pc.lift;
    out.push_back(entry(
        pc.id, "Proposition 7.4", pc.statement, Mode::ExactRational, {I("m"), I("n")}, {m_ge0, n_ge0},
        grid({{"m", ints(0, 8)}, {"n", ints(0, 14)}}), CostClass::QuadraticVsLinear, "n", {{"m", Q(6)}},
        [lift](const Point& p, Ctx& c) -> Value {
          const long m = p.i("m"), n = p.i("n");
          auto a = [&](long k) { return S2(m + lift, k + lift) * fact(k); };
          Q total;
          for (long k = 1; k <= n; ++k) {
            Q inner;
            for (long j = 0; j <= k; ++j) {
              inner += C(n, j) * a(j);
              c.term();
            }
            total += frac(sgn(k), k) * a(k) * inner;
          }
          return total;
        },
        [lift](const Point& p, Ctx&) -> Value {
          const long m = p.i("m"), n = p.i("n");
          auto a = [&](long k) { return S2(m + lift, k + lift) * fact(k); };
          Q total = pw(Q(n + lift), m) * alt_harmonic_weighted(1, n, a);
          Q partial;
          for (long k = 1; k <= n; ++k) {
            total -= C(n, k) * a(k) * partial;
            partial += frac(sgn(k), k) * a(k);
          }
          return total;
        }));
  }

  // Weights 1/k on the outer index.
  out.push_back(entry(
      "S7.5a", "Proposition 7.5",
      "sum_{k=1}^{n} (1/k) sum_{j=0}^{k} C(n,j) C(j+s,s) {m+r, j+s+r}_r j! = {m+r+n, s+r+n}_{r+n} H_n"
      " - sum_{k=1}^{n} C(n,k) C(k+s,s) {m+r, k+s+r}_r k! H_{k-1}",
      Mode::ExactRational, {I("m"), I("n"), I("r"), I("s")}, {m_ge0, n_ge0, at_least("r", 0), at_least("s", 0)},
      grid({{"m", ints(0, 6)}, {"n", ints(0, 10)}, {"r", ints(0, 3)}, {"s", ints(0, 3)}}), CostClass::QuadraticVsLinear,
      "n", {{"m", Q(5)}, {"r", Q(1)}, {"s", Q(1)}},
      [](const Point& p, Ctx& c) -> Value {
        const long m = p.i("m"), n = p.i("n"), r = p.i("r"), s = p.i("s");
        Q total;
        for (long k = 1; k <= n; ++k) {
          for (long j = 0; j <= k; ++j) {
            total += C(n, j) * C(j + s, s) * RS(m + r, j + s + r, r) * fact(j) / Q(k);
            c.term();
          }
        }
        return total;
      },
      [](const Point& p, Ctx&) -> Value {
        const long m = p.i("m"), n = p.i("n"), r = p.i("r"), s = p.i("s");
        Q total = RS(m + r + n, s + r + n, r + n) * H(n);
        for (long k = 1; k <= n; ++k) total -= C(n, k) * C(k + s, s) * RS(m + r, k + s + r, r) * fact(k) * H(k - 1);
        return total;
      }));
  out.push_back(entry(
      "S7.5b", "Proposition 7.5",
      "sum_{k=1}^{n} (1/k) sum_{j=0}^{k} C(n,j) S(m,j) j! = n^m H_n - sum_{k=1}^{m} C(n,k) S(m,k) k! H_{k-1}",
      Mode::ExactRational, {I("m"), I("n")}, {m_ge0, n_ge0}, grid({{"m", ints(0, 10)}, {"n", ints(0, 16)}}),
      CostClass::QuadraticVsLinear, "n", {{"m", Q(6)}},
      [](const Point& p, Ctx& c) -> Value {
        const long m = p.i("m"), n = p.i("n");
        Q total;
        for (long k = 1; k <= n; ++k) {
          for (long j = 0; j <= k; ++j) {
            total += C(n, j) * S2(m, j) * fact(j) / Q(k);
            c.term();
          }
        }
        return total;
      },
      [](const Point& p, Ctx&) -> Value {
        const long m = p.i("m"), n = p.i("n");
        Q total = pw(Q(n), m) * H(n);
        for (long k = 1; k <= m; ++k) total -= C(n, k) * S2(m, k) * fact(k) * H(k - 1);
        return total;
      },
      "The subtracted sum runs to m; terms with k > n or k > m vanish."));
  out.push_back(entry(
      "S7.5c", "Proposition 7.5",
      "sum_{k=1}^{n} (1/k) sum_{j=0}^{k} C(n,j) S(n,j) j! = n^n H_n - sum_{k=1}^{n} C(n,k) S(n,k) k! H_{k-1}",
      Mode::ExactRational, {I("n")}, {n_ge0}, grid({{"n", ints(0, 25)}}), CostClass::QuadraticVsLinear, "n", {},
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n");
        Q total;
        for (long k = 1; k <= n; ++k) {
          for (long j = 0; j <= k; ++j) {
            total += C(n, j) * S2(n, j) * fact(j) / Q(k);
            c.term();
          }
        }
        return total;
      },
      [](const Point& p, Ctx&) -> Value {
        const long n = p.i("n");
        Q total = pw(Q(n), n) * H(n);
        for (long k = 1; k <= n; ++k) total -= C(n, k) * S2(n, k) * fact(k) * H(k - 1);
        return total;
      }));
}

}  // namespace dsum::detail
