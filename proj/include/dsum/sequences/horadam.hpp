#pragma once

#include "dsum/kernel/big_rational.hpp"
#include "dsum/sequences/linear_memo.hpp"

namespace dsum {

/// w_j = p·w_{j-1} − q·w_{j-2} with seeds w0, w1; p and q nonzero.
struct HoradamSpec {
  BigRational w0;
  BigRational w1;
  BigRational p;
  BigRational q;

  void validate() const;
  friend bool operator==(const HoradamSpec&, const HoradamSpec&) = default;
};

/// w_n for any integer n; w_{-j} = (p·w_{-j+1} − w_{-j+2})/q.
BigRational horadam(const HoradamSpec& spec, long n);

class HoradamSequence {
 public:
  explicit HoradamSequence(HoradamSpec spec);
  const HoradamSpec& spec() const { return spec_; }
  const BigRational& at(long n) { return memo_.at(n); }

 private:
  HoradamSpec spec_;
  LinearMemo<BigRational> memo_;
};

}  // namespace dsum
