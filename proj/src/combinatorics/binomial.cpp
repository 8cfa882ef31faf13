#include "dsum/combinatorics/binomial.hpp"

#include <string>

namespace dsum {

BigInt binom(long n, long k) {
  if (n < 0) {
    throw Error(ErrorCode::UseGeneralized, "binom(" + std::to_string(n) + ", " + std::to_string(k) + ")");
  }
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigRational gen_binom(const BigRational& x, long k) {
  if (k < 0) {
    throw Error(ErrorCode::InvalidLowerIndex, "lower index " + std::to_string(k));
  }
  BigRational num(1);
  for (long i = 0; i < k; ++i) {
    num *= x - BigRational(i);
    if (num.is_zero()) return num;
  }
  return num / BigRational(factorial(k));
}

BigInt factorial(long n) {
  if (n < 0) {
    throw Error(ErrorCode::Domain, "factorial of " + std::to_string(n));
  }
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace dsum
