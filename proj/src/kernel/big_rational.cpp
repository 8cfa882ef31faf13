#include "dsum/kernel/big_rational.hpp"

#include <cmath>
#include <limits>
#include <ostream>

namespace dsum {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw Error(ErrorCode::DivisionByZero, "zero denominator");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::string s(part);
    if (s.empty() || s == "-" || s == "+") {
      throw Error(ErrorCode::MalformedGrid, "bad rational '" + std::string(text) + "'");
    }
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw Error(ErrorCode::MalformedGrid, "bad rational '" + std::string(text) + "'");
      }
    }
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return BigRational(parse_int(text));
  }
  return BigRational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

BigRational BigRational::from_double(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::Domain, "non-finite double");
  }
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return BigRational(std::move(q));
}

long BigRational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p()) {
    throw Error(ErrorCode::Domain, "not a machine integer: " + str());
  }
  return v_.get_num().get_si();
}

std::string BigRational::fraction_string() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-v_)); }

BigRational& BigRational::operator+=(const BigRational& rhs) {
  v_ += rhs.v_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  v_ -= rhs.v_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  v_ *= rhs.v_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, str() + " / 0");
  }
  v_ /= rhs.v_;
  return *this;
}

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(v_))); }

BigRational BigRational::inverse() const {
  if (is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "inverse of 0");
  }
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return BigRational(std::move(r));
}

BigRational pow(const BigRational& base, long exponent) {
  if (exponent == 0) return BigRational(1);
  const BigRational b = exponent < 0 ? base.inverse() : base;
  const unsigned long e = exponent < 0 ? static_cast<unsigned long>(-(exponent + 1)) + 1UL
                                       : static_cast<unsigned long>(exponent);
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), b.raw().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), b.raw().get_den_mpz_t(), e);
  // Powers of coprime integers stay coprime, but keep the canonicalizing ctor.
  return BigRational(num, den);
}

std::ostream& operator<<(std::ostream& os, const BigRational& value) { return os << value.str(); }

BigRational rat_arith(const BigRational& a, const BigRational& b, RatOp op) {
  switch (op) {
    case RatOp::Add: return a + b;
    case RatOp::Sub: return a - b;
    case RatOp::Mul: return a * b;
    case RatOp::Div: return a / b;
  }
  throw Error(ErrorCode::Internal, "unknown RatOp");
}

}  // namespace dsum
