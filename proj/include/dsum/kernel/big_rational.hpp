#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "dsum/error.hpp"

namespace dsum {

using BigInt = mpz_class;

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den > 0,
/// zero is 0/1. Equality is therefore structural.
///
/// Values are immutable from the outside; every operation returns a fresh
/// canonical value, so instances can be shared freely between threads.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& num, const BigInt& den);

  /// Parses "a", "-a", "a/b". Throws Error(MalformedGrid) on bad syntax and
  /// Error(DivisionByZero) for a zero denominator.
  static BigRational parse(std::string_view text);
  /// Exact binary value of a finite double.
  static BigRational from_double(double value);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Integer value; throws Error(Domain) if not an integer or out of range.
  long to_long() const;
  double to_double() const { return v_.get_d(); }

  /// "a" for integers, "a/b" otherwise.
  std::string str() const { return v_.get_str(); }
  /// Always "a/b" (denominator 1 included); the lossless report encoding.
  std::string fraction_string() const;

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  /// Throws Error(DivisionByZero) when rhs is zero.
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  BigRational abs() const;
  /// Multiplicative inverse; Error(DivisionByZero) for zero.
  BigRational inverse() const;

  const mpq_class& raw() const { return v_; }

 private:
  explicit BigRational(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;
};

/// x^e for any integer e, with 0^0 = 1; 0^e for e < 0 is a division by zero.
BigRational pow(const BigRational& base, long exponent);

std::ostream& operator<<(std::ostream& os, const BigRational& value);

enum class RatOp { Add, Sub, Mul, Div };

/// Checked binary operation; Div by zero raises Error(DivisionByZero).
BigRational rat_arith(const BigRational& a, const BigRational& b, RatOp op);

}  // namespace dsum
