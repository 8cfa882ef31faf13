#include "dsl.hpp"
#include "registry.hpp"

namespace dsum::detail {

namespace {

HoradamSpec spec_of(const Point& p) { return {p.q("w0"), p.q("w1"), p.q("p"), p.q("q")}; }

/// v_m = w_m(2, p; p, q), the companion sequence.
Q companion(Ctx& c, const Point& p, long m) { return c.W({Q(2), p.q("p"), p.q("p"), p.q("q")}, m); }

std::vector<ParamSpec> params() {
  return {I("n"), I("m"), I("r"), I("t"), R("p"), R("q"), R("w0"), R("w1")};
}

GridSpec horadam_grid() {
  return grid({{"n", ints(0, 8)},
               {"m", ints(-2, 2)},
               {"r", ints(0, 3)},
               {"t", vals({-2, 0, 1})},
               {"p", vals({1, 2, frac(1, 2), -1})},
               {"q", vals({-1, 2, -3})},
               {"w0", vals({0, 2})},
               {"w1", vals({1, frac(3, 2)})}});
}

const Point kBench = {{"m", Q(2)}, {"r", Q(1)}, {"t", Q(1)}, {"p", Q(2)}, {"q", Q(-3)}, {"w0", Q(0)}, {"w1", Q(1)}};

}  // namespace

void register_horadam(std::vector<IdentityDescriptor>& out) {
  const std::vector<Constraint> pq = {differs("p", Q(0)), differs("q", Q(0))};

  auto w81 = pq;
  w81.insert(w81.begin(), {at_least("n", 1), at_least("r", 0)});
  out.push_back(entry(
      "W8.1", "Section 8, Horadam extension",
      "sum_{k=0}^{n} sum_{j=0}^{k} (-1)^j C(n,j) C(n+j-k,r) v_m^{k-j} w_{t+m(n+j-k-r)} ="
      " (-1)^r C(n-1,r) q^{m(n-r-1)} v_m w_{t-m(n-r-1)}, v_m = w_m(2,p;p,q)",
      Mode::ExactRational, params(), w81, horadam_grid(), CostClass::QuadraticVsConstant, "n", kBench,
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), m = p.i("m"), r = p.i("r"), t = p.i("t");
        const auto w = spec_of(p);
        const auto vs = powers(companion(c, p, m), n);
        return nested(c, n, [&](long k, long j) {
          const long d = n + j - k;
          return Q(sgn(j)) * C(n, j) * C(d, r) * vs[k - j] * c.W(w, t + m * (d - r));
        });
      },
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), m = p.i("m"), r = p.i("r"), t = p.i("t");
        return Q(sgn(r)) * C(n - 1, r) * pw(p.q("q"), m * (n - r - 1)) * companion(c, p, m) *
               c.W(spec_of(p), t - m * (n - r - 1));
      },
      "The closed form carries the factor C(n-1,r)."));

  auto w82 = pq;
  w82.insert(w82.begin(), {at_least("r", 0), rule("r <= n", [](const Point& p) { return p.i("r") <= p.i("n"); })});
  out.push_back(entry(
      "W8.2", "Section 8, Horadam extension",
      "sum_{k=0}^{n} sum_{j=0}^{k} (-1)^j C(n-r,j-r) v_m^{n-j} w_{t+m(j-r)} = (-1)^r ((n-r) v_m q^{m(n-r-1)}"
      " w_{t-m(n-r-1)} + q^{m(n-r)} w_{t-m(n-r)}), v_m = w_m(2,p;p,q)",
      Mode::ExactRational, params(), w82, horadam_grid(), CostClass::QuadraticVsConstant, "n", kBench,
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), m = p.i("m"), r = p.i("r"), t = p.i("t");
        const auto w = spec_of(p);
        const auto vs = powers(companion(c, p, m), n);
        return nested(c, n, [&](long, long j) {
          return Q(sgn(j)) * C(n - r, j - r) * vs[n - j] * c.W(w, t + m * (j - r));
        });
      },
      [](const Point& p, Ctx& c) -> Value {
        const long n = p.i("n"), m = p.i("m"), r = p.i("r"), t = p.i("t");
        const auto w = spec_of(p);
        const Q& q = p.q("q");
        return Q(sgn(r)) * (Q(n - r) * companion(c, p, m) * pw(q, m * (n - r - 1)) * c.W(w, t - m * (n - r - 1)) +
                            pw(q, m * (n - r)) * c.W(w, t - m * (n - r)));
      }));
}

}  // namespace dsum::detail
