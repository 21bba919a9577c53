#pragma once

// Exact rationals with an int64 fast path and a GMP fallback.
//
// A value is stored as a reduced int64 fraction whenever both parts fit in
// [-INT64_MAX, INT64_MAX]; otherwise it is held as an mpq_class. The
// representation is canonical: a value that fits is never stored big, so
// equality is a field-by-field comparison.

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace monohopf {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Rat {
 public:
  Rat() = default;
  Rat(long long n) : num_(n) {  // NOLINT(google-explicit-constructor)
    if (n == std::numeric_limits<long long>::min()) set_big(mpq_class(mpz_from(n)));
  }
  Rat(long long n, long long d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    set_from_i128(n, d);
  }
  explicit Rat(const mpq_class& q) { set_big(q); }

  Rat(const Rat& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rat(Rat&&) noexcept = default;
  Rat& operator=(const Rat& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rat& operator=(Rat&&) noexcept = default;

  /// Parses "p", "-p" or "p/q" in decimal.
  static Rat parse(std::string_view s) {
    std::string str(s);
    if (str.empty()) throw DomainError("empty rational literal");
    mpq_class q;
    if (q.set_str(str, 10) != 0) throw DomainError("malformed rational literal '" + str + "'");
    if (q.get_den() == 0) throw DomainError("rational with zero denominator");
    q.canonicalize();
    return Rat(q);
  }

  [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
  [[nodiscard]] bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  [[nodiscard]] bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  [[nodiscard]] bool is_small() const { return !big_; }
  [[nodiscard]] int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }

  [[nodiscard]] mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_from(num_), mpz_from(den_));
    return q;
  }
  [[nodiscard]] mpz_class numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_from(num_); }
  [[nodiscard]] mpz_class denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_from(den_); }

  /// "p/q" with q > 0; zero is "0/1".
  [[nodiscard]] std::string str() const {
    if (big_) {
      return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  [[nodiscard]] std::size_t hash() const {
    if (big_) return std::hash<std::string>{}(str());
    return std::hash<long long>{}(num_) * 1000003u ^ std::hash<long long>{}(den_);
  }

  friend bool operator==(const Rat& a, const Rat& b) {
    if (a.big_ || b.big_) {
      if (!a.big_ || !b.big_) return false;
      return *a.big_ == *b.big_;
    }
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_) {
      return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    return a.to_mpq() < b.to_mpq();
  }

  Rat operator-() const {
    Rat r(*this);
    if (r.big_) {
      *r.big_ = -*r.big_;
    } else {
      r.num_ = -r.num_;
    }
    return r;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    if (a.big_ || b.big_) return Rat::from_mpq(a.to_mpq() + b.to_mpq());
    if (a.num_ == 0) return b;
    if (b.num_ == 0) return a;
    Rat r;
    if (a.den_ == 1 && b.den_ == 1) {
      r.set_reduced_i128(static_cast<__int128>(a.num_) + b.num_, 1);
      return r;
    }
    const long long g = std::gcd(a.den_, b.den_);
    if (g == 1) {
      // Already coprime: (a.n*b.d + b.n*a.d) / (a.d*b.d) is reduced.
      __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
      __int128 d = static_cast<__int128>(a.den_) * b.den_;
      r.set_reduced_i128(n, d);
      return r;
    }
    const __int128 t =
        static_cast<__int128>(a.num_) * (b.den_ / g) + static_cast<__int128>(b.num_) * (a.den_ / g);
    const long long tm = static_cast<long long>(t % g);
    const long long g2 = std::gcd(tm < 0 ? -tm : tm, g);
    __int128 d = static_cast<__int128>(a.den_ / g) * (b.den_ / g2);
    r.set_reduced_i128(t / g2, d);
    return r;
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

  friend Rat operator*(const Rat& a, const Rat& b) {
    if (a.big_ || b.big_) return Rat::from_mpq(a.to_mpq() * b.to_mpq());
    if (a.num_ == 0 || b.num_ == 0) return Rat();
    Rat r;
    if (a.den_ == 1 && b.den_ == 1) {
      r.set_reduced_i128(static_cast<__int128>(a.num_) * b.num_, 1);
      return r;
    }
    const long long g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
    const long long g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
    __int128 n = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
    __int128 d = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
    r.set_reduced_i128(n, d);
    return r;
  }

  [[nodiscard]] Rat inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    if (big_) return Rat::from_mpq(1 / *big_);
    Rat r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
  }
  friend Rat operator/(const Rat& a, const Rat& b) { return a * b.inverse(); }

  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }
  Rat& operator/=(const Rat& b) { return *this = *this / b; }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    if (r.is_integer()) {
      return os << (r.big_ ? r.big_->get_num().get_str() : std::to_string(r.num_));
    }
    return os << r.str();
  }

  static Rat from_mpq(const mpq_class& q) { return Rat(q); }

 private:
  static constexpr long long kMax = std::numeric_limits<long long>::max();

  static mpz_class mpz_from(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class z = (hi << 64) + lo;
    return neg ? mpz_class(-z) : z;
  }

  static bool fits(__int128 v) { return v <= kMax && v >= -kMax; }

  static unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
    while (b != 0) {
      unsigned __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void set_reduced_i128(__int128 n, __int128 d) {
    if (n == 0) d = 1;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (fits(n) && fits(d)) {
      num_ = static_cast<long long>(n);
      den_ = static_cast<long long>(d);
      big_.reset();
      return;
    }
    mpq_class q(mpz_from(n), mpz_from(d));
    q.canonicalize();
    set_big(q);
  }

  void set_from_i128(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      big_.reset();
      return;
    }
    unsigned __int128 un = n < 0 ? -static_cast<unsigned __int128>(n) : static_cast<unsigned __int128>(n);
    const auto g = static_cast<__int128>(gcd_u128(un, static_cast<unsigned __int128>(d)));
    set_reduced_i128(n / g, d / g);
  }

  void set_big(const mpq_class& q) {
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n != LONG_MIN) {
      num_ = n.get_si();
      den_ = d.get_si();
      big_.reset();
      return;
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(q);
  }

  long long num_ = 0;
  long long den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace monohopf
