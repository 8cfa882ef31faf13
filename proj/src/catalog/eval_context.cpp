#include "dsum/catalog/eval_context.hpp"

#include "dsum/sequences/fibonacci.hpp"

namespace dsum {

const BigRational& EvalContext::F(long n) {
  ++seq_calls;
  auto it = fib_.find(n);
  if (it == fib_.end()) it = fib_.emplace(n, BigRational(fib(n))).first;
  return it->second;
}

const BigRational& EvalContext::L(long n) {
  ++seq_calls;
  auto it = lucas_.find(n);
  if (it == lucas_.end()) it = lucas_.emplace(n, BigRational(lucas(n))).first;
  return it->second;
}

const BigRational& EvalContext::G(const GibonacciSpec& spec, long n) {
  ++seq_calls;
  for (auto& seq : gib_) {
    if (seq->spec() == spec) return seq->at(n);
  }
  gib_.push_back(std::make_unique<GibonacciSequence>(spec));
  return gib_.back()->at(n);
}

const BigRational& EvalContext::W(const HoradamSpec& spec, long n) {
  ++seq_calls;
  for (auto& seq : hor_) {
    if (seq->spec() == spec) return seq->at(n);
  }
  hor_.push_back(std::make_unique<HoradamSequence>(spec));
  return hor_.back()->at(n);
}

BigRational EvalContext::MS(int m, MStepKind kind, long n) {
  ++seq_calls;
  const MStepSpec spec{m, kind};
  for (auto& seq : mstep_) {
    if (seq->spec() == spec) return BigRational(seq->at(n));
  }
  mstep_.push_back(std::make_unique<MStepSequence>(spec));
  return BigRational(mstep_.back()->at(n));
}

}  // namespace dsum
