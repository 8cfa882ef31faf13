#include "dsum/kernel/quotient_poly.hpp"

#include <ostream>

namespace dsum {

namespace {

void check_modulus(int m) {
  if (m < 2) {
    throw Error(ErrorCode::InvalidModulus, "modulus degree must be >= 2, got " + std::to_string(m));
  }
}

// x^d = x^{d-1} + ... + x^{d-m} for d >= m; fold from the top down.
void reduce_in_place(int m, std::vector<BigRational>& c) {
  for (std::size_t d = c.size(); d-- > static_cast<std::size_t>(m);) {
    if (c[d].is_zero()) continue;
    const BigRational top = c[d];
    c[d] = BigRational();
    for (int i = 1; i <= m; ++i) c[d - i] += top;
  }
  c.resize(m);
}

}  // namespace

QuotientPoly::QuotientPoly(int m) : m_(m) {
  check_modulus(m);
  coeffs_.resize(m);
}

QuotientPoly QuotientPoly::reduce(int m, std::vector<BigRational> coeffs) {
  QuotientPoly out(m);
  if (coeffs.size() < static_cast<std::size_t>(m)) coeffs.resize(m);
  reduce_in_place(m, coeffs);
  out.coeffs_ = std::move(coeffs);
  return out;
}

QuotientPoly QuotientPoly::monomial(int m, long exponent, const BigRational& coeff) {
  if (exponent < 0) {
    throw Error(ErrorCode::Domain, "negative power of lambda");
  }
  return pow_lambda(m, exponent) * coeff;
}

bool QuotientPoly::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void QuotientPoly::check_same_modulus(const QuotientPoly& other) const {
  if (m_ != other.m_) {
    throw Error(ErrorCode::InvalidModulus, "mixed moduli " + std::to_string(m_) + " and " + std::to_string(other.m_));
  }
}

QuotientPoly QuotientPoly::operator-() const {
  QuotientPoly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QuotientPoly& QuotientPoly::operator+=(const QuotientPoly& rhs) {
  check_same_modulus(rhs);
  for (int i = 0; i < m_; ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

QuotientPoly& QuotientPoly::operator-=(const QuotientPoly& rhs) {
  check_same_modulus(rhs);
  for (int i = 0; i < m_; ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

QuotientPoly& QuotientPoly::operator*=(const QuotientPoly& rhs) {
  check_same_modulus(rhs);
  std::vector<BigRational> prod(2 * m_ - 1);
  for (int i = 0; i < m_; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (int j = 0; j < m_; ++j) prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  reduce_in_place(m_, prod);
  coeffs_ = std::move(prod);
  return *this;
}

QuotientPoly& QuotientPoly::operator*=(const BigRational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

std::string QuotientPoly::str() const {
  std::string s = "[";
  for (int i = 0; i < m_; ++i) {
    if (i) s += ", ";
    s += coeffs_[i].fraction_string();
  }
  return s + "] mod " + std::to_string(m_);
}

QuotientPoly pow_lambda(int m, long exponent) {
  check_modulus(m);
  if (exponent < 0) {
    throw Error(ErrorCode::Domain, "negative power of lambda");
  }
  QuotientPoly result = QuotientPoly::reduce(m, {BigRational(1)});
  QuotientPoly base = QuotientPoly::reduce(m, {BigRational(0), BigRational(1)});
  for (unsigned long e = static_cast<unsigned long>(exponent); e != 0; e >>= 1) {
    if (e & 1UL) result *= base;
    if (e > 1) base *= base;
  }
  return result;
}

QuotientPoly qpoly_reduce_identity(int m, const std::vector<std::pair<long, BigRational>>& expr) {
  check_modulus(m);
  QuotientPoly sum(m);
  for (const auto& [exp, coeff] : expr) sum += QuotientPoly::monomial(m, exp, coeff);
  return sum;
}

std::ostream& operator<<(std::ostream& os, const QuotientPoly& value) { return os << value.str(); }

}  // namespace dsum
