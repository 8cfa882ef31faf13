#include "dsum/kernel/qsurd.hpp"

#include <ostream>

namespace dsum {

QSurd QSurd::alpha() { return QSurd(BigRational(1, 2), BigRational(1, 2)); }
QSurd QSurd::beta() { return QSurd(BigRational(1, 2), BigRational(-1, 2)); }

BigRational QSurd::norm() const { return rat_ * rat_ - BigRational(5) * surd_ * surd_; }

QSurd QSurd::inverse() const {
  const BigRational n = norm();
  if (n.is_zero()) {
    throw Error(ErrorCode::NotInvertible, "zero has no inverse in Q(sqrt5)");
  }
  return QSurd(rat_ / n, -surd_ / n);
}

QSurd& QSurd::operator+=(const QSurd& rhs) {
  rat_ += rhs.rat_;
  surd_ += rhs.surd_;
  return *this;
}

QSurd& QSurd::operator-=(const QSurd& rhs) {
  rat_ -= rhs.rat_;
  surd_ -= rhs.surd_;
  return *this;
}

QSurd& QSurd::operator*=(const QSurd& rhs) {
  BigRational r = rat_ * rhs.rat_ + BigRational(5) * surd_ * rhs.surd_;
  BigRational s = rat_ * rhs.surd_ + surd_ * rhs.rat_;
  rat_ = std::move(r);
  surd_ = std::move(s);
  return *this;
}

QSurd& QSurd::operator/=(const QSurd& rhs) { return *this *= rhs.inverse(); }

std::string QSurd::str() const { return rat_.fraction_string() + " + " + surd_.fraction_string() + "*sqrt5"; }

QSurd pow(const QSurd& base, long exponent) {
  QSurd b = exponent < 0 ? base.inverse() : base;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-(exponent + 1)) + 1UL
                                 : static_cast<unsigned long>(exponent);
  QSurd result(1);
  while (e != 0) {
    if (e & 1UL) result *= b;
    e >>= 1;
    if (e != 0) b *= b;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const QSurd& value) { return os << value.str(); }

}  // namespace dsum
