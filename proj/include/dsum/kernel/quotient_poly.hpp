#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dsum/kernel/big_rational.hpp"

namespace dsum {

/// Polynomial over Q kept reduced modulo x^m − x^{m−1} − … − x − 1, i.e. an
/// element of Q[λ] where λ is any root of the m-step characteristic equation.
/// Coefficients are stored lowest degree first, always exactly m of them.
class QuotientPoly {
 public:
  /// Zero element. Throws Error(InvalidModulus) for m < 2.
  explicit QuotientPoly(int m);

  /// Reduces an arbitrary coefficient list (lowest degree first).
  static QuotientPoly reduce(int m, std::vector<BigRational> coeffs);
  /// coeff·λ^exponent, exponent ≥ 0.
  static QuotientPoly monomial(int m, long exponent, const BigRational& coeff);

  int modulus_degree() const { return m_; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  QuotientPoly operator-() const;
  QuotientPoly& operator+=(const QuotientPoly& rhs);
  QuotientPoly& operator-=(const QuotientPoly& rhs);
  QuotientPoly& operator*=(const QuotientPoly& rhs);
  QuotientPoly& operator*=(const BigRational& scalar);

  friend QuotientPoly operator+(QuotientPoly a, const QuotientPoly& b) { return a += b; }
  friend QuotientPoly operator-(QuotientPoly a, const QuotientPoly& b) { return a -= b; }
  friend QuotientPoly operator*(QuotientPoly a, const QuotientPoly& b) { return a *= b; }
  friend QuotientPoly operator*(QuotientPoly a, const BigRational& s) { return a *= s; }
  friend bool operator==(const QuotientPoly& a, const QuotientPoly& b) = default;

  /// "[c0, c1, ...] mod m" with fraction-form coefficients.
  std::string str() const;

 private:
  void check_same_modulus(const QuotientPoly& other) const;

  int m_;
  std::vector<BigRational> coeffs_;
};

/// λ^exponent for exponent ≥ 0, by repeated squaring in the quotient ring.
QuotientPoly pow_lambda(int m, long exponent);

/// Reduces Σ coeff·λ^exp. A zero result certifies the relation for every
/// root of the characteristic equation at once.
QuotientPoly qpoly_reduce_identity(int m, const std::vector<std::pair<long, BigRational>>& expr);

std::ostream& operator<<(std::ostream& os, const QuotientPoly& value);

}  // namespace dsum
