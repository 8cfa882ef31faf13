#include "dsum/combinatorics/stirling.hpp"

#include <map>
#include <string>
#include <tuple>

#include "dsum/combinatorics/binomial.hpp"

namespace dsum {

BigInt stirling2(long n, long k) {
  if (n < 0) {
    throw Error(ErrorCode::Domain, "stirling2 needs n >= 0, got " + std::to_string(n));
  }
  if (k < 0 || k > n) return 0;
  thread_local std::vector<std::vector<BigInt>> rows{{BigInt(1)}};
  while (static_cast<long>(rows.size()) <= n) {
    const auto& prev = rows.back();
    const long m = static_cast<long>(rows.size());
    std::vector<BigInt> row(m + 1);
    for (long j = 1; j <= m; ++j) {
      // {m, j} = j{m-1, j} + {m-1, j-1}
      BigInt v = prev[j - 1];
      if (j < m) v += j * prev[j];
      row[j] = std::move(v);
    }
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

BigInt rstirling_alternating(long n, long k, long r) {
  if (n < 0 || k < 0 || r < 0) {
    throw Error(ErrorCode::InvalidShift, "negative r-Stirling index");
  }
  BigInt s = 0;
  for (long p = 0; p <= k; ++p) {
    BigInt term = binom(k, p);
    BigInt base = r + p;
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));  // 0^0 = 1
    term *= power;
    if ((k - p) % 2 == 0) {
      s += term;
    } else {
      s -= term;
    }
  }
  BigInt q;
  const BigInt f = factorial(k);
  if (!mpz_divisible_p(s.get_mpz_t(), f.get_mpz_t())) {
    throw Error(ErrorCode::Internal, "alternating sum not divisible by k!");
  }
  mpz_divexact(q.get_mpz_t(), s.get_mpz_t(), f.get_mpz_t());
  return q;
}

BigInt rstirling2(long n_shifted, long k_shifted, long r) {
  if (r < 0 || n_shifted < r || k_shifted < r) {
    throw Error(ErrorCode::InvalidShift, "{" + std::to_string(n_shifted) + ", " + std::to_string(k_shifted) + "}_" +
                                             std::to_string(r) + " has an index below the shift");
  }
  const long n = n_shifted - r;
  const long k = k_shifted - r;
  if (k > n) return 0;
  thread_local std::map<std::tuple<long, long, long>, BigInt> memo;
  const auto key = std::make_tuple(n, k, r);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigInt v = rstirling_alternating(n, k, r);
  memo.emplace(key, v);
  return v;
}

StirlingTable::StirlingTable(long max_n, long max_k, long r) : max_n_(max_n), max_k_(max_k), r_(r) {
  if (max_n < 0 || max_k < 0 || r < 0) {
    throw Error(ErrorCode::InvalidShift, "negative table bound or shift");
  }
  rows_.assign(max_n + 1, std::vector<BigInt>(max_k + 1, BigInt(0)));
  rows_[0][0] = 1;
  for (long n = 1; n <= max_n; ++n) {
    for (long k = 0; k <= max_k; ++k) {
      // {N, K}_r = K{N-1, K}_r + {N-1, K-1}_r with K = k + r
      BigInt v = (k + r) * rows_[n - 1][k];
      if (k > 0) v += rows_[n - 1][k - 1];
      rows_[n][k] = std::move(v);
    }
  }
  for (long n = 0; n <= max_n; ++n) {
    for (long k = 0; k <= max_k; ++k) {
      const BigInt alt = k > n ? BigInt(0) : rstirling_alternating(n, k, r);
      if (alt != rows_[n][k]) {
        throw Error(ErrorCode::Internal, "r-Stirling recurrence and alternating sum disagree at n=" + std::to_string(n) +
                                             " k=" + std::to_string(k) + " r=" + std::to_string(r));
      }
    }
  }
}

const BigInt& StirlingTable::at(long n, long k) const {
  if (n < 0 || k < 0 || n > max_n_ || k > max_k_) {
    throw Error(ErrorCode::IndexOutOfRange, "StirlingTable index out of bounds");
  }
  return rows_[n][k];
}

}  // namespace dsum
