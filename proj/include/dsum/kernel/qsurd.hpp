#pragma once

#include <iosfwd>
#include <string>

#include "dsum/kernel/big_rational.hpp"

namespace dsum {

/// Element rat + surd·√5 of the quadratic field Q(√5).
class QSurd {
 public:
  QSurd() = default;
  QSurd(BigRational rat) : rat_(std::move(rat)) {}  // NOLINT(google-explicit-constructor)
  QSurd(long rat) : rat_(rat) {}  // NOLINT(google-explicit-constructor)
  QSurd(BigRational rat, BigRational surd) : rat_(std::move(rat)), surd_(std::move(surd)) {}

  /// (1 + √5)/2 and (1 − √5)/2.
  static QSurd alpha();
  static QSurd beta();

  const BigRational& rat() const { return rat_; }
  const BigRational& surd() const { return surd_; }
  bool is_rational() const { return surd_.is_zero(); }
  bool is_zero() const { return rat_.is_zero() && surd_.is_zero(); }

  /// rat² − 5·surd²; zero only for the zero element.
  BigRational norm() const;
  QSurd conj() const { return QSurd(rat_, -surd_); }
  /// Throws Error(NotInvertible) for zero.
  QSurd inverse() const;

  QSurd operator-() const { return QSurd(-rat_, -surd_); }
  QSurd& operator+=(const QSurd& rhs);
  QSurd& operator-=(const QSurd& rhs);
  QSurd& operator*=(const QSurd& rhs);
  QSurd& operator/=(const QSurd& rhs);

  friend QSurd operator+(QSurd a, const QSurd& b) { return a += b; }
  friend QSurd operator-(QSurd a, const QSurd& b) { return a -= b; }
  friend QSurd operator*(QSurd a, const QSurd& b) { return a *= b; }
  friend QSurd operator/(QSurd a, const QSurd& b) { return a /= b; }
  friend bool operator==(const QSurd& a, const QSurd& b) = default;

  /// "a/b + c/d*sqrt5" with both components in fraction form.
  std::string str() const;

 private:
  BigRational rat_;
  BigRational surd_;
};

/// Binary exponentiation; negative exponents go through the norm inverse.
QSurd pow(const QSurd& base, long exponent);

std::ostream& operator<<(std::ostream& os, const QSurd& value);

}  // namespace dsum
