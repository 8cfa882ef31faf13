#pragma once

// Shorthand shared by the family files. Nested sides are written as plain
// loops over the printed index ranges; closed sides call the fast sequence
// and combinatorics routines.

#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "dsum/catalog/descriptor.hpp"
#include "dsum/combinatorics/binomial.hpp"
#include "dsum/combinatorics/harmonic.hpp"
#include "dsum/combinatorics/stirling.hpp"

namespace dsum::detail {

using Q = BigRational;
using Ctx = EvalContext;

inline ParamSpec I(std::string name) { return {std::move(name), ParamKind::Integer}; }
inline ParamSpec R(std::string name) { return {std::move(name), ParamKind::Rational}; }
inline ParamSpec X(std::string name) { return {std::move(name), ParamKind::Real}; }

inline Constraint at_least(const std::string& name, long lo) {
  return {name + " >= " + std::to_string(lo), [name, lo](const Point& p) { return p.i(name) >= lo; }};
}

inline Constraint differs(const std::string& name, const Q& value) {
  return {name + " != " + value.str(), [name, value](const Point& p) { return p.q(name) != value; }};
}

inline Constraint rule(std::string text, std::function<bool(const Point&)> holds) {
  return {std::move(text), std::move(holds)};
}

inline Axis ints(long lo, long hi) { return IntRange{lo, hi}; }
inline Axis vals(std::initializer_list<Q> values) { return make_value_list(values); }
inline Axis reals(double lo, double hi) { return RealInterval{lo, hi}; }

inline GridSpec grid(std::initializer_list<std::pair<std::string, Axis>> axes,
                     Sampling sampling = Sampling::exhaustive()) {
  GridSpec g;
  for (const auto& [name, axis] : axes) g.set(name, axis);
  g.sampling = sampling;
  return g;
}

inline IdentityDescriptor entry(std::string id, std::string citation, std::string statement, Mode mode,
                        std::vector<ParamSpec> params, std::vector<Constraint> constraints, GridSpec g, CostClass cost,
                        std::string scale, Point bench, Evaluator lhs, Evaluator rhs, std::string note = {}) {
  return {
      .id = std::move(id),
      .citation = std::move(citation),
      .statement = std::move(statement),
      .note = std::move(note),
      .mode = mode,
      .params = std::move(params),
      .constraints = std::move(constraints),
      .grid = std::move(g),
      .cost = cost,
      .scale_param = std::move(scale),
      .bench_point = std::move(bench),
      .lhs = std::move(lhs),
      .rhs = std::move(rhs),
  };
}

/// (−1)^e for any integer e.
inline long sgn(long e) { return (e & 1L) ? -1 : 1; }
inline bool even(long n) { return (n & 1L) == 0; }

inline Q C(long n, long k) { return Q(binom(n, k)); }
inline Q fact(long n) { return Q(factorial(n)); }
inline Q pw(const Q& x, long e) { return pow(x, e); }
inline Q frac(long a, long b) { return Q(a) / Q(b); }
inline Q H(long n, long order = 1) { return harmonic(n, order, HarmonicKind::Plain); }
inline Q O(long n, long order = 1) { return harmonic(n, order, HarmonicKind::Odd); }
inline Q S2(long n, long k) { return Q(stirling2(n, k)); }
inline Q RS(long n_shifted, long k_shifted, long r) { return Q(rstirling2(n_shifted, k_shifted, r)); }

/// C(n, 0..n).
inline std::vector<Q> binom_row(long n) {
  std::vector<Q> row;
  row.reserve(n + 1);
  BigInt c = 1;
  for (long j = 0; j <= n; ++j) {
    row.emplace_back(c);
    c = c * (n - j) / (j + 1);
  }
  return row;
}

/// x^0 .. x^count.
inline std::vector<Q> powers(const Q& x, long count) {
  std::vector<Q> out;
  out.reserve(count + 1);
  Q v(1);
  for (long e = 0; e <= count; ++e) {
    out.push_back(v);
    v *= x;
  }
  return out;
}

/// Σ_{k=0}^{n} Σ_{j=0}^{k} body(k, j), one counted term per summand.
template <class Body>
Q nested(Ctx& c, long n, Body body) {
  Q s;
  for (long k = 0; k <= n; ++k) {
    for (long j = 0; j <= k; ++j) {
      s += body(k, j);
      c.term();
    }
  }
  return s;
}

}  // namespace dsum::detail
