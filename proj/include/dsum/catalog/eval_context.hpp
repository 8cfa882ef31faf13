#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "dsum/kernel/big_rational.hpp"
#include "dsum/sequences/gibonacci.hpp"
#include "dsum/sequences/horadam.hpp"
#include "dsum/sequences/mstep.hpp"

namespace dsum {

/// Per-worker scratch state: sequence caches and operation counters.
/// Not shared between threads; every worker owns one.
class EvalContext {
 public:
  /// Summands evaluated by a nested-sum side.
  std::uint64_t terms = 0;
  /// Sequence lookups (Fibonacci, Lucas, Gibonacci, Horadam, m-step).
  std::uint64_t seq_calls = 0;

  void reset_counters() { terms = seq_calls = 0; }
  void term(std::uint64_t count = 1) { terms += count; }

  const BigRational& F(long n);
  const BigRational& L(long n);
  const BigRational& G(const GibonacciSpec& spec, long n);
  const BigRational& W(const HoradamSpec& spec, long n);
  BigRational MS(int m, MStepKind kind, long n);

 private:
  std::unordered_map<long, BigRational> fib_;
  std::unordered_map<long, BigRational> lucas_;
  std::vector<std::unique_ptr<GibonacciSequence>> gib_;
  std::vector<std::unique_ptr<HoradamSequence>> hor_;
  std::vector<std::unique_ptr<MStepSequence>> mstep_;
};

}  // namespace dsum
