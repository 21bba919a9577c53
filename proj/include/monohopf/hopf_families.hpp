#pragma once

// The families KZ_n(q) (truncated), C_d(n,mu,q) and A(n,d,mu,q), the
// isomorphism between the path and the generator presentations, the
// existence test d | n and the classification of these structures.

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monohopf/detail/skew_extension.hpp"
#include "monohopf/morphism.hpp"
#include "monohopf/qcombinatorics.hpp"
#include "monohopf/verify.hpp"

namespace monohopf {

struct FamilyParams {
  long n = 1;
  long d = 2;
  RootOfUnity q;       // written with conductor d
  CycloNum mu;         // effective: forced to 0 when d = n
  CycloNum mu_given;   // as supplied

  /// Validates and normalizes; d is read off q.
  static FamilyParams make(long n, RootOfUnity q, const CycloNum& mu) {
    FamilyParams p;
    p.n = n;
    p.q = q.primitive_form();
    p.d = p.q.order();
    p.mu_given = mu;
    p.mu = p.d == n ? CycloNum() : mu;
    if (n < 1) throw DomainError("n must be positive");
    if (p.d < 2) throw DomainError("q must have order d >= 2 (got q = " + q.str() + ")");
    if (n % p.d != 0) {
      throw DomainError("no Hopf structure on C_" + std::to_string(p.d) + "(" + std::to_string(n) +
                        "): the order d of q must divide n");
    }
    return p;
  }
  /// Same, with an explicit d that must equal the order of q.
  static FamilyParams make(long n, long d, RootOfUnity q, const CycloNum& mu) {
    if (q.order() != d) {
      throw DomainError("q = " + q.str() + " has order " + std::to_string(q.order()) + ", not d = " +
                        std::to_string(d));
    }
    return make(n, q, mu);
  }

  [[nodiscard]] long conductor() const { return std::lcm(d, mu.conductor()); }
  [[nodiscard]] CycloNum qv() const { return q.value_in(conductor()); }
  [[nodiscard]] std::string str(const char* family = "A") const {
    return std::string(family) + "(" + std::to_string(n) + "," + std::to_string(d) + "," + mu_given.str() + "," +
           q.str() + ")";
  }
};

/// Which formula the C_d(n,mu,q) antipode uses. `standard` is
/// S(p_i^l) = (-1)^l q^(-l(l-1)/2 - il) p_(n-l-i)^l, the one compatible with
/// Delta(p) = sum beta (x) alpha; `printed` has -l(l+1)/2 in the exponent and
/// fails the antipode identities whenever q != 1.
enum class PathAntipode { standard, printed };

namespace detail {

inline std::string path_label(long i, long l) {
  if (l == 0) return "e" + std::to_string(i);
  return "p" + std::to_string(i) + "^" + std::to_string(l);
}

inline std::string gx_label(long i, long j) {
  std::string gs = i == 0 ? "" : (i == 1 ? "g" : "g^" + std::to_string(i));
  return skew_label(gs, static_cast<std::size_t>(j));
}

inline long mod(long a, long n) { return ((a % n) + n) % n; }

/// Powers q^0 .. q^(d-1) of an order-d root (exponents reduced mod d).
inline std::vector<CycloNum> root_powers(const RootOfUnity& q, long cond) {
  std::vector<CycloNum> out;
  for (long k = 0; k < q.order(); ++k) out.push_back(q.pow(k).value_in(cond));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// KZ_n(q) on a finite window of path lengths

class OutOfWindow : public DomainError {
 public:
  using DomainError::DomainError;
};

/// KZ_n(q) restricted to paths of length <= L. Products whose length would
/// exceed L are not stored; asking for one throws OutOfWindow.
class TruncatedKZ {
 public:
  TruncatedKZ(long n, RootOfUnity q, long window) : n_(n), L_(window), q_(q.primitive_form()) {
    if (n < 1 || window < 1) throw DomainError("KZ_n(q) window needs n >= 1 and L >= 1");
    cond_ = q_.conductor();
    binom_ = std::make_shared<GaussianBinomialTable>(2 * L_, q_.value());
  }

  [[nodiscard]] long n() const { return n_; }
  [[nodiscard]] long window() const { return L_; }
  [[nodiscard]] long conductor() const { return cond_; }
  [[nodiscard]] std::size_t dim() const { return static_cast<std::size_t>(n_ * (L_ + 1)); }
  [[nodiscard]] std::size_t index(long i, long l) const {
    if (l < 0 || l > L_) throw OutOfWindow("path length " + std::to_string(l) + " outside the window");
    return static_cast<std::size_t>(detail::mod(i, n_) * (L_ + 1) + l);
  }
  [[nodiscard]] std::string label(std::size_t k) const {
    return detail::path_label(static_cast<long>(k) / (L_ + 1), static_cast<long>(k) % (L_ + 1));
  }

  /// p_i^l * p_j^m = q^(jl) (l+m choose l)_q p_(i+j)^(l+m).
  [[nodiscard]] SparseVec product(long i, long l, long j, long m) const {
    if (l + m > L_) {
      throw OutOfWindow("p" + std::to_string(i) + "^" + std::to_string(l) + " * p" + std::to_string(j) + "^" +
                        std::to_string(m) + " has length " + std::to_string(l + m) + " > window " +
                        std::to_string(L_));
    }
    const CycloNum c = q_.pow(j * l).value() * binom_->at(l + m, l);
    if (c.is_zero()) return {};
    return {{index(i + j, l + m), c}};
  }
  [[nodiscard]] SparseTensor coproduct(long i, long l) const {
    SparseTensor t;
    for (long k = 0; k <= l; ++k) t.push_back({index(i + k, l - k), index(i, k), CycloNum::one(cond_)});
    return normalize(std::move(t));
  }
  [[nodiscard]] SparseVec antipode(long i, long l, PathAntipode form = PathAntipode::standard) const {
    const long tri = form == PathAntipode::standard ? l * (l - 1) / 2 : l * (l + 1) / 2;
    CycloNum c = q_.pow(-tri - i * l).value();
    if (l % 2 == 1) c = -c;
    return {{index(n_ - l - i, l), c}};
  }

  /// Exhaustive in-window checks: associativity, Delta multiplicative and
  /// the antipode identities, every instance whose lengths stay in range.
  [[nodiscard]] AxiomReport verify_window(PathAntipode form = PathAntipode::standard) const;

 private:
  SparseVec mul_vec(const SparseVec& u, const SparseVec& v) const {
    SparseVec acc;
    for (const Term& a : u) {
      for (const Term& b : v) {
        const long i = static_cast<long>(a.index) / (L_ + 1);
        const long l = static_cast<long>(a.index) % (L_ + 1);
        const long j = static_cast<long>(b.index) / (L_ + 1);
        const long m = static_cast<long>(b.index) % (L_ + 1);
        for (const Term& t : product(i, l, j, m)) acc.push_back({t.index, a.coef * b.coef * t.coef});
      }
    }
    return normalize(std::move(acc));
  }

  long n_;
  long L_;
  RootOfUnity q_;
  long cond_ = 1;
  std::shared_ptr<GaussianBinomialTable> binom_;
};

inline AxiomReport TruncatedKZ::verify_window(PathAntipode form) const {
  AxiomReport rep{"KZ window"};
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < dim(); ++k) labels.push_back(label(k));
  auto fail = [&](std::string axiom, std::string where, std::string lhs, std::string rhs) {
    rep.passed = false;
    rep.axiom = std::move(axiom);
    rep.witness_labels = std::move(where);
    rep.lhs = std::move(lhs);
    rep.rhs = std::move(rhs);
    return rep;
  };
  auto name = [](long i, long l) { return detail::path_label(i, l); };
  for (long i = 0; i < n_; ++i) {
    for (long l = 0; l <= L_; ++l) {
      for (long j = 0; j < n_; ++j) {
        for (long m = 0; l + m <= L_; ++m) {
          for (long k = 0; k < n_; ++k) {
            for (long r = 0; l + m + r <= L_; ++r) {
              const SparseVec lhs = mul_vec(product(i, l, j, m), {{index(k, r), CycloNum::one(cond_)}});
              const SparseVec rhs = mul_vec({{index(i, l), CycloNum::one(cond_)}}, product(j, m, k, r));
              ++rep.checks;
              if (!same(lhs, rhs)) {
                return fail("associativity", name(i, l) + ", " + name(j, m) + ", " + name(k, r),
                            format(lhs, labels), format(rhs, labels));
              }
            }
          }
          // Delta(ab) = Delta(a) Delta(b)
          SparseTensor lhs;
          for (const Term& t : product(i, l, j, m)) {
            const long pi = static_cast<long>(t.index) / (L_ + 1);
            const long pl = static_cast<long>(t.index) % (L_ + 1);
            for (const Term2& s : coproduct(pi, pl)) lhs.push_back({s.left, s.right, t.coef * s.coef});
          }
          lhs = normalize(std::move(lhs));
          SparseTensor rhs;
          for (const Term2& a : coproduct(i, l)) {
            for (const Term2& b : coproduct(j, m)) {
              const SparseVec x = mul_vec({{a.left, a.coef}}, {{b.left, b.coef}});
              const SparseVec y = mul_vec({{a.right, CycloNum::one(cond_)}}, {{b.right, CycloNum::one(cond_)}});
              for (const Term& u : x) {
                for (const Term& v : y) rhs.push_back({u.index, v.index, u.coef * v.coef});
              }
            }
          }
          rhs = normalize(std::move(rhs));
          ++rep.checks;
          if (!same(lhs, rhs)) {
            return fail("comultiplicativity", name(i, l) + ", " + name(j, m), format(lhs, labels),
                        format(rhs, labels));
          }
        }
      }
      // antipode on p_i^l
      SparseVec left;
      SparseVec right;
      for (const Term2& t : coproduct(i, l)) {
        const long al = static_cast<long>(t.left);
        const long ar = static_cast<long>(t.right);
        const SparseVec s_left = antipode(al / (L_ + 1), al % (L_ + 1), form);
        const SparseVec s_right = antipode(ar / (L_ + 1), ar % (L_ + 1), form);
        for (const Term& u : mul_vec(s_left, {{t.right, t.coef}})) left.push_back(u);
        for (const Term& u : mul_vec({{t.left, t.coef}}, s_right)) right.push_back(u);
      }
      left = normalize(std::move(left));
      right = normalize(std::move(right));
      const SparseVec expect = l == 0 ? SparseVec{{index(0, 0), CycloNum::one(cond_)}} : SparseVec{};
      rep.checks += 2;
      if (!same(left, expect)) return fail("S(a1)a2 = e(a)1", name(i, l), format(left, labels), format(expect, labels));
      if (!same(right, expect)) {
        return fail("a1S(a2) = e(a)1", name(i, l), format(right, labels), format(expect, labels));
      }
    }
  }
  return rep;
}

inline TruncatedKZ kz_n_q_truncated(long n, RootOfUnity q, long window) { return TruncatedKZ(n, q, window); }

// ---------------------------------------------------------------------------
// C_d(n, mu, q) and A(n, d, mu, q)

/// Hopf structure on C_d(n): basis p_i^l at index i*d + l.
inline FDBialgebra c_d_n_mu_q(const FamilyParams& p, PathAntipode form = PathAntipode::standard) {
  const long n = p.n;
  const long d = p.d;
  const long cond = p.conductor();
  const CycloNum mu = p.mu.embed(cond);
  const auto qp = detail::root_powers(p.q, cond);
  auto qpow = [&](long e) { return qp[static_cast<std::size_t>(detail::mod(e, d))]; };
  const GaussianBinomialTable binom(2 * d, p.qv());
  std::vector<CycloNum> fact{CycloNum::one(cond)};
  for (long k = 1; k < d; ++k) fact.push_back(fact.back() * q_integer(k, p.qv()));

  std::vector<std::string> labels;
  for (long i = 0; i < n; ++i) {
    for (long l = 0; l < d; ++l) labels.push_back(detail::path_label(i, l));
  }
  FDBialgebra a(static_cast<std::size_t>(n * d), cond, std::move(labels));
  auto idx = [&](long i, long l) { return static_cast<std::size_t>(detail::mod(i, n) * d + l); };

  for (long i = 0; i < n; ++i) {
    for (long l = 0; l < d; ++l) {
      for (long j = 0; j < n; ++j) {
        for (long m = 0; m < d; ++m) {
          SparseVec v;
          if (l + m < d) {
            const CycloNum c = qpow(j * l) * binom.at(l + m, l);
            if (!c.is_zero()) v.push_back({idx(i + j, l + m), c});
          } else if (!mu.is_zero()) {
            const long k = l + m - d;
            const CycloNum c = mu * qpow(j * l) * fact[static_cast<std::size_t>(k)] /
                               (fact[static_cast<std::size_t>(l)] * fact[static_cast<std::size_t>(m)]);
            v.push_back({idx(i + j, k), c});
            v.push_back({idx(i + j + d, k), -c});
          }
          a.set_product(idx(i, l), idx(j, m), std::move(v));
        }
      }
    }
  }
  a.set_unit(basis_vector(idx(0, 0), cond));

  std::vector<CycloNum> eps;
  for (long i = 0; i < n; ++i) {
    for (long l = 0; l < d; ++l) {
      SparseTensor t;
      for (long k = 0; k <= l; ++k) t.push_back({idx(i + k, l - k), idx(i, k), CycloNum::one(cond)});
      a.set_coproduct(idx(i, l), std::move(t));
      eps.push_back(l == 0 ? CycloNum::one(cond) : CycloNum::zero(cond));

      const long tri = form == PathAntipode::standard ? l * (l - 1) / 2 : l * (l + 1) / 2;
      CycloNum c = qpow(-tri - i * l);
      if (l % 2 == 1) c = -c;
      a.set_antipode(idx(i, l), {{idx(n - l - i, l), c}});
    }
  }
  a.set_counit(std::move(eps));
  return a;
}

/// C_d(n, q) = C_d(n, 0, q).
inline FDBialgebra c_d_n_q(long n, RootOfUnity q) { return c_d_n_mu_q(FamilyParams::make(n, q, CycloNum(0))); }

/// A(n,d,mu,q) on the basis g^i x^j at index i*d + j.
inline FDBialgebra a_n_d_mu_q(const FamilyParams& p, XAntipode form = XAntipode::minus_ginv_x) {
  detail::SkewExtensionData s;
  const long cond = p.conductor();
  const std::size_t n = static_cast<std::size_t>(p.n);
  s.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) s.table[a][b] = (a + b) % n;
  }
  s.identity = 0;
  s.g = n == 1 ? 0 : 1;
  for (long k = 0; k < p.n; ++k) {
    s.chi.push_back(p.q.pow(k).value_in(cond));
    s.group_labels.push_back(k == 0 ? "" : (k == 1 ? "g" : "g^" + std::to_string(k)));
  }
  s.mu = p.mu.embed(cond);
  s.d = static_cast<std::size_t>(p.d);
  s.antipode = form;
  return detail::build_skew_extension(s);
}

// ---------------------------------------------------------------------------
// A(n,d,mu,q) -> C_d(n,mu,q)

struct FamilyIso {
  IsoWitness witness;
  MapReport report;
};

/// g^i x^j -> (j!_q) p_i^j.
inline FamilyIso family_iso(const FamilyParams& p) {
  const FDBialgebra a = a_n_d_mu_q(p);
  const FDBialgebra c = c_d_n_mu_q(p);
  const long cond = p.conductor();
  std::vector<SparseVec> cols;
  CycloNum fact = CycloNum::one(cond);
  std::vector<CycloNum> facts;
  for (long j = 0; j < p.d; ++j) {
    if (j > 0) fact = fact * q_integer(j, p.qv());
    facts.push_back(fact);
  }
  for (long i = 0; i < p.n; ++i) {
    for (long j = 0; j < p.d; ++j) {
      cols.push_back({{static_cast<std::size_t>(i * p.d + j), facts[static_cast<std::size_t>(j)]}});
    }
  }
  FamilyIso out{make_witness(a, c, std::move(cols)), {}};
  out.report = check_map(out.witness);
  return out;
}

// ---------------------------------------------------------------------------
// Existence: d | n

struct BinomialWitness {
  long d0 = 1;            // a divisor of n
  RootOfUnity q;          // of order d0
  bool pattern_holds = false;  // (m+l choose l)_q = 0 for all l, m <= d-1, l+m >= d
  std::optional<std::pair<long, long>> counterexample;  // (l, m) with nonzero binomial
};

struct ExistenceReport {
  long n = 0;
  long d = 0;
  bool admits = false;
  std::vector<BinomialWitness> witnesses;
  /// The pattern holds exactly for d0 = d.
  [[nodiscard]] bool witness_consistent() const {
    for (const auto& w : witnesses) {
      if (w.pattern_holds != (w.d0 == d)) return false;
    }
    return true;
  }
};

namespace detail {

/// Gaussian binomial tables cached per root of unity.
inline const GaussianBinomialTable& cached_binomials(const RootOfUnity& q, long top) {
  static std::mutex mu;
  static std::map<std::pair<long, long>, std::pair<long, std::unique_ptr<GaussianBinomialTable>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  const RootOfUnity r = q.primitive_form();
  auto& slot = cache[{r.conductor(), r.exponent()}];
  if (!slot.second || slot.first < top) {
    const long t = std::max(top, 2 * slot.first);
    slot = {t, std::make_unique<GaussianBinomialTable>(t, r.value())};
  }
  return *slot.second;
}

}  // namespace detail

/// C_d(n) carries a Hopf structure iff d | n. The witness evaluates, for
/// every divisor d0 of n and every q of order d0, whether all
/// (m+l choose l)_q with l, m <= d-1 and l+m >= d vanish.
inline ExistenceReport admits_hopf(long n, long d) {
  if (d < 2) throw DomainError("admits_hopf requires d >= 2");
  if (n < 1) throw DomainError("admits_hopf requires n >= 1");
  ExistenceReport rep{n, d, n % d == 0, {}};
  for (long d0 = 1; d0 <= n; ++d0) {
    if (n % d0 != 0) continue;
    for (const RootOfUnity& q : primitive_roots(d0)) {
      const auto& t = detail::cached_binomials(q, 2 * d - 2);
      BinomialWitness w{d0, q, true, std::nullopt};
      for (long l = 1; l < d && w.pattern_holds; ++l) {
        for (long m = d - l; m < d; ++m) {
          if (!t.at(l + m, l).is_zero()) {
            w.pattern_holds = false;
            w.counterexample = std::make_pair(l, m);
            break;
          }
        }
      }
      rep.witnesses.push_back(w);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Classification

enum class IsoKind { isomorphic, not_isomorphic, isomorphic_over_extension };

struct Classification {
  IsoKind kind = IsoKind::not_isomorphic;
  std::optional<CycloNum> delta;  // mu2 = delta^d mu1; the witness sends x to x / delta
  std::string reason;             // separating invariant or the root needed
  std::optional<IsoWitness> witness;
  std::optional<MapReport> witness_report;

  [[nodiscard]] std::string str() const {
    switch (kind) {
      case IsoKind::isomorphic:
        return "isomorphic" + (delta ? "(delta=" + delta->str() + ")" : std::string()) +
               (reason.empty() ? "" : " [" + reason + "]");
      case IsoKind::not_isomorphic:
        return "not-isomorphic (" + reason + ")";
      default:
        return "isomorphic-over-extension (" + reason + ")";
    }
  }
};

namespace detail {

/// Integer k-th root if exact.
inline std::optional<mpz_class> exact_root(const mpz_class& v, long k) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(k)) != 0) return r;
  return std::nullopt;
}

/// Conductor of Q(sqrt D), D squarefree.
inline long sqrt_conductor(long D) {
  const long a = D < 0 ? -D : D;
  return ((D % 4) + 4) % 4 == 1 ? a : 4 * a;
}

/// An explicit sqrt(D) in Q(zeta_c), c = sqrt_conductor(D): Gauss sums for the
/// odd primes, zeta_4 / zeta_8 + zeta_8^-1 / zeta_8 + zeta_8^3 for the rest.
inline CycloNum sqrt_squarefree(long D) {
  const long c = sqrt_conductor(D);
  CycloNum out = CycloNum::one(c);
  long rest = D;
  long a = D < 0 ? -D : D;
  for (long p = 3; p <= a; p += 2) {
    if (a % p != 0) continue;
    a /= p;
    CycloNum g = CycloNum::zero(c);
    for (long k = 1; k < p; ++k) {
      long e = 1;
      for (long j = 0; j < (p - 1) / 2; ++j) e = e * k % p;
      const CycloNum z = CycloNum::root(c, (c / p) * k);
      g = e == 1 ? g + z : g - z;
    }
    out *= g;
    rest /= (p % 4 == 1 ? p : -p);
  }
  if (rest == -1) out *= CycloNum::root(c, c / 4);
  if (rest == 2) out *= CycloNum::root(c, c / 8) + CycloNum::root(c, c - c / 8);
  if (rest == -2) out *= CycloNum::root(c, c / 8) + CycloNum::root(c, 3 * c / 8);
  return out;
}

/// Primes dividing v, or empty if v is too large to factor by trial division.
inline std::optional<std::vector<long>> small_prime_support(mpz_class v) {
  if (v < 0) v = -v;
  if (v > 1000000000000L) return std::nullopt;
  long x = v.get_si();
  std::vector<long> ps;
  for (long p = 2; p * p <= x; ++p) {
    if (x % p != 0) continue;
    ps.push_back(p);
    while (x % p == 0) x /= p;
  }
  if (x > 1) ps.push_back(x);
  return ps;
}

/// A delta with delta^d = r of the form t * sqrt(D) * w (t rational, D
/// squarefree, w a root of unity; D = 1 unless d is even) lying in Q(zeta_m)
/// for some m <= `bound`; empty when the search finds none.
inline std::optional<CycloNum> dth_root(const CycloNum& r, long d, long bound) {
  if (r.is_zero()) return std::nullopt;
  const long m = std::lcm(2L, r.conductor());
  const CycloNum rr = r.embed(m);
  for (long k = 0; k < m; ++k) {
    const CycloNum s = rr / CycloNum::root(m, k);
    if (!s.is_rational()) continue;
    Rat sv = s.rational_part();
    RootOfUnity z(m, k);
    if (sv.sign() < 0) {
      sv = -sv;
      z = z * RootOfUnity(2, 1);
    }
    std::vector<long> ds{1};
    if (d % 2 == 0) {
      const auto pn = small_prime_support(sv.numerator());
      const auto pd = small_prime_support(sv.denominator());
      if (pn && pd) {
        std::vector<long> primes = *pn;
        primes.insert(primes.end(), pd->begin(), pd->end());
        for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size()); ++mask) {
          long D = 1;
          for (std::size_t b = 0; b < primes.size(); ++b) {
            if (mask >> b & 1) D *= primes[b];
          }
          if (D > 1) ds.push_back(D);
          ds.push_back(-D);
        }
      } else {
        ds.push_back(-1);
      }
    }
    for (const long D : ds) {
      const long cd = sqrt_conductor(D);
      if (cd > bound) continue;
      // (sqrt D)^d = D^(d/2); the sign of D^(d/2) moves into the root of unity
      const long absd = D < 0 ? -D : D;
      Rat rest = sv;
      RootOfUnity zz = z;
      if (D != 1) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), mpz_class(absd).get_mpz_t(), static_cast<unsigned long>(d / 2));
        rest = rest / Rat(mpq_class(pw));
        if (D < 0 && (d / 2) % 2 == 1) zz = zz * RootOfUnity(2, 1);
      }
      const auto num = exact_root(rest.numerator(), d);
      const auto den = exact_root(rest.denominator(), d);
      if (!num || !den) continue;
      const CycloNum t = CycloNum(Rat(mpq_class(*num, *den)));
      const CycloNum sq = D == 1 ? CycloNum(1) : sqrt_squarefree(D);
      for (long c = 1; c <= bound; ++c) {
        if (std::lcm(c, cd) > bound) continue;
        for (long e = 0; e < c; ++e) {
          const RootOfUnity w(c, e);
          if (w.pow(d) != zz) continue;
          CycloNum delta = t * sq * w.value();
          if (delta.pow(d) == r) return delta;
        }
      }
    }
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace detail

/// Iso test for two members of the family; positive verdicts carry a
/// verified generator-image witness A(p1) -> A(p2).
inline Classification classify_pair(const FamilyParams& p1, const FamilyParams& p2, long conductor_bound = 48) {
  Classification out;
  if (p1.n != p2.n) {
    out.reason = "n differs: " + std::to_string(p1.n) + " vs " + std::to_string(p2.n) + " (group-likes)";
    return out;
  }
  if (p1.d != p2.d) {
    out.reason = "d differs: " + std::to_string(p1.d) + " vs " + std::to_string(p2.d);
    return out;
  }
  if (p1.q != p2.q) {
    out.reason = "q differs: " + p1.q.str() + " vs " + p2.q.str();
    return out;
  }
  std::optional<CycloNum> delta;
  if (p1.mu.is_zero() && p2.mu.is_zero()) {
    delta = CycloNum(1);
    if (p1.d == p1.n) out.reason = "d = n";
  } else if (p1.mu.is_zero() != p2.mu.is_zero()) {
    out.reason = "mu = 0 on one side only";
    return out;
  } else {
    delta = detail::dth_root(p2.mu / p1.mu, p1.d, conductor_bound);
    if (!delta) {
      out.kind = IsoKind::isomorphic_over_extension;
      out.reason = "needs delta with delta^" + std::to_string(p1.d) + " = " + (p2.mu / p1.mu).str() +
                   " of the form t*sqrt(D)*zeta within conductor " + std::to_string(conductor_bound);
      return out;
    }
  }
  const FDBialgebra a1 = a_n_d_mu_q(p1);
  const FDBialgebra a2 = a_n_d_mu_q(p2);
  const long m = std::lcm(a2.conductor(), delta->conductor());
  const std::size_t d = static_cast<std::size_t>(p1.d);
  std::map<std::size_t, SparseVec> images;
  if (p1.n > 1) images[d] = basis_vector(d, m);
  images[1] = {{1, delta->inverse().embed(m)}};
  IsoWitness w = extend_from_generators(a1, a2, images);
  w.delta = delta;
  MapReport rep = check_map(w);
  if (!rep.iso()) throw DomainError("classification witness failed: " + rep.summary());
  out.kind = IsoKind::isomorphic;
  out.delta = delta;
  out.witness = std::move(w);
  out.witness_report = std::move(rep);
  return out;
}

}  // namespace monohopf
