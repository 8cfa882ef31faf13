#include "dsum/sequences/gibonacci.hpp"

namespace dsum {

void GibonacciSpec::validate() const {
  if (g0.is_zero() && g1.is_zero()) {
    throw Error(ErrorCode::InvalidSpec, "Gibonacci seeds must not both be zero");
  }
}

GibonacciSequence::GibonacciSequence(GibonacciSpec spec)
    : spec_((spec.validate(), std::move(spec))),
      memo_(
          spec_.g0, spec_.g1, [](const BigRational& a, const BigRational& b) { return a + b; },
          [](const BigRational& k, const BigRational& k1) { return k1 - k; }) {}

BigRational gibonacci(const GibonacciSpec& spec, long n) {
  spec.validate();
  BigRational a = spec.g0;
  BigRational b = spec.g1;
  if (n >= 0) {
    for (long i = 0; i < n; ++i) {
      BigRational next = a + b;
      a = std::move(b);
      b = std::move(next);
    }
    return a;
  }
  for (long i = 0; i > n; --i) {
    BigRational prev = b - a;
    b = std::move(a);
    a = std::move(prev);
  }
  return a;
}

std::pair<QSurd, QSurd> gibonacci_binet_weights(const GibonacciSpec& spec) {
  spec.validate();
  const QSurd a = QSurd::alpha();
  const QSurd b = QSurd::beta();
  const QSurd d = a - b;
  return {(QSurd(spec.g1) - QSurd(spec.g0) * b) / d, (QSurd(spec.g0) * a - QSurd(spec.g1)) / d};
}

}  // namespace dsum
