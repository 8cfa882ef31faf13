#include "dsum/sequences/horadam.hpp"

namespace dsum {

void HoradamSpec::validate() const {
  if (p.is_zero() || q.is_zero()) {
    throw Error(ErrorCode::InvalidSpec, "Horadam parameters p and q must be nonzero");
  }
}

HoradamSequence::HoradamSequence(HoradamSpec spec)
    : spec_((spec.validate(), std::move(spec))),
      memo_(
          spec_.w0, spec_.w1,
          [p = spec_.p, q = spec_.q](const BigRational& a, const BigRational& b) { return p * b - q * a; },
          [p = spec_.p, q = spec_.q](const BigRational& k, const BigRational& k1) { return (p * k - k1) / q; }) {}

BigRational horadam(const HoradamSpec& spec, long n) {
  spec.validate();
  BigRational a = spec.w0;
  BigRational b = spec.w1;
  if (n >= 0) {
    for (long i = 0; i < n; ++i) {
      BigRational next = spec.p * b - spec.q * a;
      a = std::move(b);
      b = std::move(next);
    }
    return a;
  }
  for (long i = 0; i > n; --i) {
    BigRational prev = (spec.p * a - b) / spec.q;
    b = std::move(a);
    a = std::move(prev);
  }
  return a;
}

}  // namespace dsum
