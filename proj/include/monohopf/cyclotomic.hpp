#pragma once

// Exact arithmetic in the cyclotomic fields Q(zeta_N) = Q[x]/(Phi_N).

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "monohopf/rational.hpp"

namespace monohopf {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Q, coefficients low degree first.

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(std::size_t degree, Rat coeff = Rat(1)) {
    std::vector<Rat> c(degree + 1);
    c[degree] = std::move(coeff);
    return Polynomial(std::move(c));
  }

  [[nodiscard]] bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  [[nodiscard]] long degree() const { return static_cast<long>(c_.size()) - 1; }
  [[nodiscard]] const std::vector<Rat>& coeffs() const { return c_; }
  [[nodiscard]] Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(); }
  [[nodiscard]] const Rat& leading() const { return c_.back(); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }

  /// Euclidean division; returns (quotient, remainder).
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rat> rem = a.c_;
    const auto db = static_cast<std::size_t>(b.degree());
    if (rem.size() < b.c_.size()) return {Polynomial(), a};
    std::vector<Rat> quot(rem.size() - db);
    const Rat inv_lead = b.leading().inverse();
    for (std::size_t k = rem.size(); k-- > db;) {
      if (rem[k].is_zero()) continue;
      Rat f = rem[k] * inv_lead;
      for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
      quot[k - db] = std::move(f);
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  [[nodiscard]] std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      Rat c = c_[k];
      if (!first) os << (c.sign() < 0 ? " - " : " + ");
      else if (c.sign() < 0) os << "-";
      if (c.sign() < 0) c = -c;
      if (k == 0 || !c.is_one()) os << c;
      if (k > 0) os << var << (k > 1 ? "^" + std::to_string(k) : "");
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

inline long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

inline long lcm_conductor(long a, long b) { return std::lcm(a, b); }

namespace detail {

inline Polynomial compute_cyclotomic(long n, std::map<long, Polynomial>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  // x^n - 1 divided by Phi_d for every proper divisor d.
  Polynomial p = Polynomial::monomial(static_cast<std::size_t>(n)) - Polynomial::monomial(0);
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = Polynomial::divmod(p, compute_cyclotomic(d, memo));
    p = std::move(q);
  }
  memo.emplace(n, p);
  return p;
}

}  // namespace detail

/// Phi_N, monic of degree phi(N).
inline Polynomial cyclotomic_polynomial(long n) {
  if (n < 1) throw DomainError("cyclotomic_polynomial requires N >= 1");
  static std::mutex mu;
  static std::map<long, Polynomial> memo;
  std::lock_guard<std::mutex> lock(mu);
  return detail::compute_cyclotomic(n, memo);
}

// ---------------------------------------------------------------------------
// Per-conductor context: Phi_N and the reduced powers of x.

class CycloField {
 public:
  [[nodiscard]] long conductor() const { return n_; }
  [[nodiscard]] std::size_t degree() const { return phi_; }
  /// Nonzero coefficients of Phi_N below the leading term, as (power, coeff).
  [[nodiscard]] const std::vector<std::pair<std::size_t, long long>>& tail() const { return tail_; }
  /// x^k mod Phi_N for 0 <= k < N.
  [[nodiscard]] const std::vector<long long>& power(long k) const {
    return powers_[static_cast<std::size_t>(((k % n_) + n_) % n_)];
  }
  [[nodiscard]] const Polynomial& modulus() const { return modulus_; }

  /// Contexts live for the whole program; the returned reference is stable.
  static const CycloField& get(long n) {
    if (n < 1) throw DomainError("conductor must be positive");
    static std::mutex mu;
    static std::map<long, std::unique_ptr<CycloField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[n];
    if (!slot) slot.reset(new CycloField(n));
    return *slot;
  }

 private:
  explicit CycloField(long n) : n_(n), modulus_(cyclotomic_polynomial(n)) {
    phi_ = static_cast<std::size_t>(modulus_.degree());
    for (std::size_t j = 0; j < phi_; ++j) {
      const Rat& c = modulus_.coeffs()[j];
      if (c.is_zero()) continue;
      if (!c.is_integer() || !c.is_small()) throw DomainError("cyclotomic coefficient out of range");
      tail_.emplace_back(j, std::stoll(c.numerator().get_str()));
    }
    powers_.resize(static_cast<std::size_t>(n));
    std::vector<long long> cur(phi_, 0);
    cur[0] = 1;
    for (long k = 0; k < n; ++k) {
      powers_[static_cast<std::size_t>(k)] = cur;
      // multiply by x and reduce
      std::vector<long long> next(phi_ + 1, 0);
      for (std::size_t j = 0; j < phi_; ++j) next[j + 1] = cur[j];
      const long long top = next[phi_];
      for (const auto& [j, c] : tail_) next[j] -= top * c;
      next.resize(phi_);
      cur = std::move(next);
    }
  }

  long n_;
  Polynomial modulus_;
  std::size_t phi_ = 0;
  std::vector<std::pair<std::size_t, long long>> tail_;
  std::vector<std::vector<long long>> powers_;
};

// ---------------------------------------------------------------------------

class CycloNum {
 public:
  using Coeffs = boost::container::small_vector<Rat, 12>;

  /// Zero of Q = Q(zeta_1).
  CycloNum() : field_(&CycloField::get(1)), c_(1) {}
  CycloNum(long long v) : field_(&CycloField::get(1)), c_(1) {  // NOLINT(google-explicit-constructor)
    c_[0] = Rat(v);
  }
  CycloNum(Rat v) : field_(&CycloField::get(1)), c_(1) {  // NOLINT(google-explicit-constructor)
    c_[0] = std::move(v);
  }
  CycloNum(Rat v, long conductor) : field_(&CycloField::get(conductor)), c_(field_->degree()) {
    c_[0] = std::move(v);
  }
  /// From a coefficient vector of length phi(N); reduction is the caller's
  /// responsibility only in the sense that the length must match.
  CycloNum(long conductor, const std::vector<Rat>& coeffs) : field_(&CycloField::get(conductor)) {
    if (coeffs.size() != field_->degree()) {
      throw DomainError("CycloNum of conductor " + std::to_string(conductor) + " needs " +
                        std::to_string(field_->degree()) + " coefficients, got " +
                        std::to_string(coeffs.size()));
    }
    c_.assign(coeffs.begin(), coeffs.end());
  }

  static CycloNum zero(long conductor) { return CycloNum(Rat(), conductor); }
  static CycloNum one(long conductor) { return CycloNum(Rat(1), conductor); }
  /// zeta_N^k.
  static CycloNum root(long conductor, long k) {
    CycloNum r = zero(conductor);
    const auto& p = r.field_->power(k);
    for (std::size_t j = 0; j < p.size(); ++j) r.c_[j] = Rat(p[j]);
    return r;
  }

  [[nodiscard]] long conductor() const { return field_->conductor(); }
  [[nodiscard]] const CycloField& field() const { return *field_; }
  [[nodiscard]] const Coeffs& coeffs() const { return c_; }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r.is_zero(); });
  }
  [[nodiscard]] bool is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rat& r) { return r.is_zero(); });
  }
  [[nodiscard]] bool is_one() const { return c_[0].is_one() && is_rational(); }
  [[nodiscard]] const Rat& rational_part() const { return c_[0]; }

  /// Hash of the representation; equal values share it only when the
  /// conductors agree.
  [[nodiscard]] std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(conductor());
    for (const Rat& r : c_) h = h * 0x9e3779b97f4a7c15ULL + r.hash();
    return h;
  }

  /// Image under Q(zeta_N) -> Q(zeta_M), zeta_N -> zeta_M^(M/N). Requires N | M.
  [[nodiscard]] CycloNum embed(long m) const {
    const long n = conductor();
    if (m == n) return *this;
    if (m % n != 0) {
      throw DomainError("cannot embed conductor " + std::to_string(n) + " into " + std::to_string(m));
    }
    CycloNum r = zero(m);
    const long step = m / n;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k].is_zero()) continue;
      const auto& p = r.field_->power(static_cast<long>(k) * step);
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] != 0) r.c_[j] += c_[k] * Rat(p[j]);
      }
    }
    return r;
  }

  CycloNum operator-() const {
    CycloNum r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend CycloNum operator+(const CycloNum& a, const CycloNum& b) {
    if (a.field_ != b.field_) return unify_apply(a, b, [](const CycloNum& x, const CycloNum& y) { return x + y; });
    CycloNum r(a);
    for (std::size_t k = 0; k < r.c_.size(); ++k) {
      if (!b.c_[k].is_zero()) r.c_[k] += b.c_[k];
    }
    return r;
  }
  friend CycloNum operator-(const CycloNum& a, const CycloNum& b) {
    if (a.field_ != b.field_) return unify_apply(a, b, [](const CycloNum& x, const CycloNum& y) { return x - y; });
    CycloNum r(a);
    for (std::size_t k = 0; k < r.c_.size(); ++k) {
      if (!b.c_[k].is_zero()) r.c_[k] -= b.c_[k];
    }
    return r;
  }

  friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    if (a.field_ != b.field_) return unify_apply(a, b, [](const CycloNum& x, const CycloNum& y) { return x * y; });
    if (b.is_rational()) return a.scaled(b.c_[0]);
    if (a.is_rational()) return b.scaled(a.c_[0]);
    const std::size_t phi = a.c_.size();
    boost::container::small_vector<Rat, 24> t(2 * phi - 1);
    for (std::size_t i = 0; i < phi; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < phi; ++j) {
        if (b.c_[j].is_zero()) continue;
        t[i + j] += a.c_[i] * b.c_[j];
      }
    }
    const auto& tail = a.field_->tail();
    for (std::size_t k = t.size(); k-- > phi;) {
      if (t[k].is_zero()) continue;
      for (const auto& [j, c] : tail) t[k - phi + j] -= t[k] * Rat(c);
    }
    CycloNum r;
    r.field_ = a.field_;
    r.c_.assign(std::make_move_iterator(t.begin()), std::make_move_iterator(t.begin() + static_cast<long>(phi)));
    return r;
  }

  [[nodiscard]] CycloNum scaled(const Rat& s) const {
    if (s.is_one()) return *this;
    CycloNum r(*this);
    for (auto& x : r.c_) {
      if (!x.is_zero()) x *= s;
    }
    return r;
  }

  /// Inverse via the extended Euclidean algorithm against Phi_N.
  [[nodiscard]] CycloNum inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(zeta_" + std::to_string(conductor()) + ")");
    if (is_rational()) return CycloNum(c_[0].inverse(), conductor());
    // Maintain r_i = s_i * a (mod Phi); stop when r_i is a nonzero constant.
    Polynomial r0 = field_->modulus();
    Polynomial r1(std::vector<Rat>(c_.begin(), c_.end()));
    Polynomial s0;
    Polynomial s1 = Polynomial::monomial(0);
    while (r1.degree() > 0) {
      auto [q, rem] = Polynomial::divmod(r0, r1);
      Polynomial s2 = s0 - q * s1;
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r1.is_zero()) throw DomainError("element not invertible modulo Phi_N");
    const Rat inv_c = r1.coeffs()[0].inverse();
    auto [q, s] = Polynomial::divmod(s1, field_->modulus());
    CycloNum out = zero(conductor());
    for (std::size_t k = 0; k < out.c_.size(); ++k) out.c_[k] = s.coeff(k) * inv_c;
    return out;
  }

  friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }

  CycloNum& operator+=(const CycloNum& b) { return *this = *this + b; }
  CycloNum& operator-=(const CycloNum& b) { return *this = *this - b; }
  CycloNum& operator*=(const CycloNum& b) { return *this = *this * b; }

  [[nodiscard]] CycloNum pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNum result = one(conductor());
    CycloNum base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const CycloNum& a, const CycloNum& b) {
    if (a.field_ != b.field_) {
      const long m = lcm_conductor(a.conductor(), b.conductor());
      return a.embed(m).c_ == b.embed(m).c_;
    }
    return a.c_ == b.c_;
  }
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  /// Human-readable form, e.g. "1 + 2*z4" for 1 + 2 zeta_4.
  [[nodiscard]] std::string str() const {
    if (is_rational()) {
      std::ostringstream os;
      os << c_[0];
      return os.str();
    }
    Polynomial p(std::vector<Rat>(c_.begin(), c_.end()));
    return p.str("z" + std::to_string(conductor()));
  }

 private:
  template <class Op>
  static CycloNum unify_apply(const CycloNum& a, const CycloNum& b, Op op) {
    const long m = lcm_conductor(a.conductor(), b.conductor());
    return op(a.embed(m), b.embed(m));
  }

  const CycloField* field_;
  Coeffs c_;
};

inline std::ostream& operator<<(std::ostream& os, const CycloNum& c) { return os << c.str(); }

// ---------------------------------------------------------------------------

/// zeta_N^k, kept as exponent data so orders are read off exactly.
class RootOfUnity {
 public:
  RootOfUnity() = default;
  RootOfUnity(long conductor, long exponent) : n_(conductor), k_(exponent) {
    if (n_ < 1) throw DomainError("root of unity needs a positive conductor");
    k_ = ((k_ % n_) + n_) % n_;
  }

  [[nodiscard]] long conductor() const { return n_; }
  [[nodiscard]] long exponent() const { return k_; }
  [[nodiscard]] long order() const { return n_ / std::gcd(n_, k_); }
  /// Same element written with conductor equal to its order.
  [[nodiscard]] RootOfUnity primitive_form() const {
    const long g = std::gcd(n_, k_);
    return {n_ / g, k_ / g};
  }
  [[nodiscard]] CycloNum value() const { return CycloNum::root(n_, k_); }
  [[nodiscard]] CycloNum value_in(long conductor) const { return value().embed(conductor); }

  [[nodiscard]] RootOfUnity pow(long e) const {
    return {n_, static_cast<long>((static_cast<__int128>(k_) * (((e % n_) + n_) % n_)) % n_)};
  }
  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    const long m = std::lcm(a.n_, b.n_);
    return {m, a.k_ * (m / a.n_) + b.k_ * (m / b.n_)};
  }
  [[nodiscard]] RootOfUnity inverse() const { return {n_, n_ - k_}; }

  /// Equal as field elements (conductors may differ).
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
    const long m = std::lcm(a.n_, b.n_);
    return a.k_ * (m / a.n_) % m == b.k_ * (m / b.n_) % m;
  }
  friend bool operator!=(const RootOfUnity& a, const RootOfUnity& b) { return !(a == b); }

  [[nodiscard]] std::string str() const {
    if (k_ == 0) return "1";
    if (2 * k_ == n_) return "-1";
    return "z" + std::to_string(n_) + (k_ == 1 ? "" : "^" + std::to_string(k_));
  }

  /// Recovers zeta_N^k from an exact value, searching exponents in the
  /// value's own conductor. Empty if the value is not a root of unity there.
  static std::optional<RootOfUnity> recognize(const CycloNum& v) {
    const long n = v.conductor();
    // Roots of unity in Q(zeta_N) have order dividing lcm(2, N).
    const long m = std::lcm(2L, n);
    const CycloNum w = v.embed(m);
    for (long k = 0; k < m; ++k) {
      if (CycloNum::root(m, k) == w) return RootOfUnity(m, k).primitive_form();
    }
    return std::nullopt;
  }

 private:
  long n_ = 1;
  long k_ = 0;
};

/// order_of: N / gcd(N, k).
inline long order_of(const RootOfUnity& q) { return q.order(); }

/// Every primitive d-th root of unity, written with conductor d.
inline std::vector<RootOfUnity> primitive_roots(long d) {
  std::vector<RootOfUnity> out;
  for (long k = 0; k < d; ++k) {
    if (std::gcd(k, d) == 1) out.emplace_back(d, k);
  }
  return out;
}

}  // namespace monohopf
