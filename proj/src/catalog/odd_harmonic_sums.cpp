#include "dsl.hpp"
#include "registry.hpp"

namespace dsum::detail {

namespace {

/// Σ_{k=0}^{n} Σ_{j=0}^{k} (-1)^j C(n,j) n f(n+j-k, j, k).
template <class F>
Q shifted_alternating(Ctx& c, long n, F f) {
  return nested(c, n, [&](long k, long j) { return Q(sgn(j) * n) * C(n, j) * f(n + j - k, j, k); });
}

struct Row {
  const char* id;
  const char* citation;
  const char* statement;
  std::vector<Constraint> constraints;
  std::function<Q(long d, long j, long k)> summand;
  std::function<Q(long n)> closed;
  CostClass cost;
  /// Extra factor n on the double sum.
  bool times_n = false;
};

}  // namespace

void register_odd_harmonic(std::vector<IdentityDescriptor>& out) {
  const auto n_ge0 = at_least("n", 0);
  const std::string lhs_head = "sum_{k=0}^{n} sum_{j=0}^{k} (-1)^j C(n,j) n ";

  const std::vector<Row> rows = {
      {"O6.2a", "Proposition 6.2", "/ (n+j-k+1) = 1", {at_least("n", 1)},
       [](long d, long, long) { return frac(1, d + 1); }, [](long) { return Q(1); }, CostClass::QuadraticVsConstant},
      {"O6.2b", "Proposition 6.2", "/ (n+j-k+1)^2 = H_n", {n_ge0},
       [](long d, long, long) { return frac(1, (d + 1) * (d + 1)); }, [](long n) { return H(n); },
       CostClass::QuadraticVsLinear},
      {"O6.2c", "Proposition 6.2", "/ (n+j-k+1)^3 = (H_n^2 + H_n^(2)) / 2", {n_ge0},
       [](long d, long, long) { return pw(Q(d + 1), -3); },
       [](long n) { return (pw(H(n), 2) + H(n, 2)) / Q(2); }, CostClass::QuadraticVsLinear},
      {"O6.2d", "Proposition 6.2", "/ (n+j-k+1)^4 = (H_n^3 + 3 H_n H_n^(2) + 2 H_n^(3)) / 6", {n_ge0},
       [](long d, long, long) { return pw(Q(d + 1), -4); },
       [](long n) { return (pw(H(n), 3) + Q(3) * H(n) * H(n, 2) + Q(2) * H(n, 3)) / Q(6); },
       CostClass::QuadraticVsLinear},
      {"O6.4a", "Proposition 6.4", "H_{n+j-k+1} / (n+j-k+1)^2 = H_n^(2)", {n_ge0},
       [](long d, long, long) { return H(d + 1) / Q((d + 1) * (d + 1)); }, [](long n) { return H(n, 2); },
       CostClass::QuadraticVsLinear},
      {"O6.4b", "Proposition 6.4", "n H^(2)_{n+j-k+1} / (n+j-k+1) = H_n", {n_ge0},
       [](long d, long, long) { return H(d + 1, 2) / Q(d + 1); }, [](long n) { return H(n); },
       CostClass::QuadraticVsLinear, true},
      {"O6.6a", "Proposition 6.6", "2^{j-k} / (n+j-k+1)^2 = 2^{-n} O_{ceil(n/2)}", {n_ge0},
       [](long d, long j, long k) { return pw(Q(2), j - k) / Q((d + 1) * (d + 1)); },
       [](long n) { return pw(Q(2), -n) * O((n + 1) / 2); }, CostClass::QuadraticVsLinear},
      {"O6.6b", "Proposition 6.6", "2^{j-k} / (n+j-k+1) = 0 for even n, 2^{-n} for odd n", {n_ge0},
       [](long d, long j, long k) { return pw(Q(2), j - k) / Q(d + 1); },
       [](long n) { return even(n) ? Q(0) : pw(Q(2), -n); }, CostClass::QuadraticVsConstant},
      {"O6.8", "Proposition 6.8", "/ (2(n+j-k)+1)^2 = 2^{2n-1} O_n / C(2n,n)", {n_ge0},
       [](long d, long, long) { return frac(1, (2 * d + 1) * (2 * d + 1)); },
       [](long n) { return pw(Q(2), 2 * n - 1) * O(n) / C(2 * n, n); }, CostClass::QuadraticVsLinear},
  };

  for (const auto& row : rows) {
    auto summand = row.summand;
    auto closed = row.closed;
    const bool times_n = row.times_n;
    out.push_back(entry(
        row.id, row.citation, lhs_head + row.statement, Mode::ExactRational, {I("n")}, row.constraints,
        grid({{"n", ints(0, 30)}}), row.cost, "n", {},
        [summand, times_n](const Point& p, Ctx& c) -> Value {
          const long n = p.i("n");
          const Q s = shifted_alternating(c, n, summand);
          return times_n ? Q(n) * s : s;
        },
        [closed](const Point& p, Ctx&) -> Value { return closed(p.i("n")); }));
  }
}

}  // namespace dsum::detail
