#pragma once

// q-integers, q-factorials and Gaussian binomials over Q(zeta_N).

#include <algorithm>
#include <vector>

#include "monohopf/cyclotomic.hpp"

namespace monohopf {

/// l_q = 1 + q + ... + q^(l-1).
inline CycloNum q_integer(long l, const CycloNum& q) {
  CycloNum sum = CycloNum::zero(q.conductor());
  CycloNum power = CycloNum::one(q.conductor());
  for (long j = 0; j < l; ++j) {
    sum += power;
    power = power * q;
  }
  return sum;
}

/// l!_q = 1_q 2_q ... l_q, with 0!_q = 1.
inline CycloNum q_factorial(long l, const CycloNum& q) {
  CycloNum prod = CycloNum::one(q.conductor());
  for (long j = 1; j <= l; ++j) prod = prod * q_integer(j, q);
  return prod;
}

/// Row-by-row Gaussian binomials (a choose b)_q for a <= top, via
/// (a choose b) = (a-1 choose b-1) + q^b (a-1 choose b). No division, so it
/// stays valid where q-factorials vanish.
class GaussianBinomialTable {
 public:
  GaussianBinomialTable(long top, const CycloNum& q) : top_(top) {
    const long n = q.conductor();
    std::vector<CycloNum> qpow;
    qpow.reserve(static_cast<std::size_t>(top) + 1);
    qpow.push_back(CycloNum::one(n));
    for (long b = 1; b <= top; ++b) qpow.push_back(qpow.back() * q);
    rows_.resize(static_cast<std::size_t>(top) + 1);
    rows_[0] = {CycloNum::one(n)};
    for (long a = 1; a <= top; ++a) {
      auto& row = rows_[static_cast<std::size_t>(a)];
      const auto& prev = rows_[static_cast<std::size_t>(a) - 1];
      row.resize(static_cast<std::size_t>(a) + 1);
      row[0] = CycloNum::one(n);
      row[static_cast<std::size_t>(a)] = CycloNum::one(n);
      for (long b = 1; b < a; ++b) {
        row[static_cast<std::size_t>(b)] =
            prev[static_cast<std::size_t>(b) - 1] + qpow[static_cast<std::size_t>(b)] * prev[static_cast<std::size_t>(b)];
      }
    }
  }

  [[nodiscard]] const CycloNum& at(long a, long b) const {
    if (a < 0 || a > top_) throw DomainError("q-binomial table queried outside its range");
    if (b < 0 || b > a) throw DomainError("q_binomial requires 0 <= bot <= top");
    return rows_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

 private:
  long top_;
  std::vector<std::vector<CycloNum>> rows_;
};

inline CycloNum q_binomial(long top, long bot, const CycloNum& q) {
  if (top < 0 || bot < 0 || bot > top) throw DomainError("q_binomial requires 0 <= bot <= top");
  return GaussianBinomialTable(top, q).at(top, bot);
}

/// True iff floor((m+l)/d) - floor(m/d) - floor(l/d) > 0, i.e. iff
/// (m+l choose l)_q vanishes for q of order d.
inline bool binomial_vanishes(long l, long m, long d) {
  if (d < 2) throw DomainError("binomial_vanishes requires d >= 2");
  return (m + l) / d - m / d - l / d > 0;
}

/// Checks sum_{r+s=k} q^(s l - s r) (k choose r)_q (N0-k choose l-r)_q
/// == (N0 choose l)_q. `perturb`, when set, scales the summand with r equal
/// to *perturb by 2; it exists to exercise the checker itself.
inline bool q_vandermonde_check(long n0, long l, long k, const CycloNum& q,
                                std::optional<long> perturb = std::nullopt) {
  if (l < 0 || l > n0) throw DomainError("q_vandermonde_check requires 0 <= l <= N0");
  const GaussianBinomialTable table(n0, q);
  CycloNum lhs = CycloNum::zero(q.conductor());
  for (long r = 0; r <= std::min(k, l); ++r) {
    const long s = k - r;
    if (l - r > n0 - k) continue;
    CycloNum term = q.pow(s * l - s * r) * table.at(k, r) * table.at(n0 - k, l - r);
    if (perturb && *perturb == r) term = term.scaled(Rat(2));
    lhs += term;
  }
  return lhs == table.at(n0, l);
}

}  // namespace monohopf
