#pragma once

// Exhaustive axiom verification for FDBialgebra.
//
// Every check runs over all basis tuples. Scalars are interned into a pool
// (one id per distinct field element) and products/sums of ids are cached,
// so the inner loops do table lookups instead of cyclotomic arithmetic.
// The structures this library builds only ever produce a few hundred
// distinct coefficients.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "monohopf/bialgebra.hpp"

namespace monohopf {

struct AxiomReport {
  AxiomReport() = default;
  explicit AxiomReport(std::string name) : suite(std::move(name)) {}

  std::string suite;
  bool applicable = true;
  bool passed = true;
  std::string axiom;                 // first failing axiom
  std::vector<std::size_t> witness;  // basis indices of the failing instance
  std::string witness_labels;
  std::string lhs;
  std::string rhs;
  std::uint64_t checks = 0;

  [[nodiscard]] std::string summary() const {
    std::ostringstream os;
    os << suite << ": ";
    if (!applicable) {
      os << "n/a (" << axiom << ")";
    } else if (passed) {
      os << "pass (" << checks << " checks)";
    } else {
      os << "FAIL " << axiom << " at (" << witness_labels << "): " << lhs << " != " << rhs;
    }
    return os.str();
  }
};

struct VerificationSummary {
  AxiomReport algebra;
  AxiomReport coalgebra;
  AxiomReport bialgebra;
  AxiomReport antipode;

  [[nodiscard]] bool all_passed() const {
    return algebra.passed && coalgebra.passed && bialgebra.passed && antipode.passed && algebra.applicable &&
           coalgebra.applicable && bialgebra.applicable && antipode.applicable;
  }
  [[nodiscard]] std::vector<const AxiomReport*> reports() const { return {&algebra, &coalgebra, &bialgebra, &antipode}; }
};

namespace detail {

struct CycloHash {
  std::size_t operator()(const CycloNum& c) const { return c.hash(); }
};

/// Interned scalars of one conductor; id 0 is zero, id 1 is one.
class ScalarPool {
 public:
  explicit ScalarPool(long conductor) : conductor_(conductor) {
    id(CycloNum::zero(conductor));
    id(CycloNum::one(conductor));
  }

  std::uint32_t id(const CycloNum& c) {
    CycloNum e = c.embed(conductor_);
    auto it = ids_.find(e);
    if (it != ids_.end()) return it->second;
    const auto k = static_cast<std::uint32_t>(values_.size());
    values_.push_back(e);
    ids_.emplace(std::move(e), k);
    return k;
  }
  [[nodiscard]] const CycloNum& value(std::uint32_t k) const { return values_[k]; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) {
    if (a == 0 || b == 0) return 0;
    if (a == 1) return b;
    if (b == 1) return a;
    if (a > b) std::swap(a, b);
    const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
    auto it = mul_.find(key);
    if (it != mul_.end()) return it->second;
    const std::uint32_t r = id(values_[a] * values_[b]);
    mul_.emplace(key, r);
    return r;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a > b) std::swap(a, b);
    const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
    auto it = add_.find(key);
    if (it != add_.end()) return it->second;
    const std::uint32_t r = id(values_[a] + values_[b]);
    add_.emplace(key, r);
    return r;
  }

 private:
  long conductor_;
  std::vector<CycloNum> values_;
  std::unordered_map<CycloNum, std::uint32_t, CycloHash> ids_;
  std::unordered_map<std::uint64_t, std::uint32_t> mul_;
  std::unordered_map<std::uint64_t, std::uint32_t> add_;
};

struct ITerm {
  std::uint64_t index;
  std::uint32_t coef;
  friend bool operator==(const ITerm& a, const ITerm& b) { return a.index == b.index && a.coef == b.coef; }
};
using IVec = std::vector<ITerm>;

/// Accumulates id-valued terms keyed by a 64-bit index.
class Accumulator {
 public:
  explicit Accumulator(ScalarPool& pool) : pool_(&pool) {}
  void add(std::uint64_t index, std::uint32_t coef) {
    if (coef != 0) terms_.push_back({index, coef});
  }
  IVec take() {
    std::sort(terms_.begin(), terms_.end(), [](const ITerm& a, const ITerm& b) { return a.index < b.index; });
    IVec out;
    for (std::size_t k = 0; k < terms_.size();) {
      std::uint32_t c = terms_[k].coef;
      std::size_t m = k + 1;
      for (; m < terms_.size() && terms_[m].index == terms_[k].index; ++m) c = pool_->add(c, terms_[m].coef);
      if (c != 0) out.push_back({terms_[k].index, c});
      k = m;
    }
    terms_.clear();
    return out;
  }

 private:
  ScalarPool* pool_;
  IVec terms_;
};

/// FDBialgebra with interned coefficients and flat indices.
class Interned {
 public:
  explicit Interned(const FDBialgebra& a) : src_(&a), pool_(a.conductor()), n_(a.dim()) {
    if (a.has_algebra()) {
      mult_.resize(n_ * n_);
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) mult_[i * n_ + j] = intern(a.product(i, j));
      }
      unit_ = intern(a.unit());
    }
    if (a.has_coalgebra()) {
      comult_.resize(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        for (const Term2& t : a.coproduct(i)) comult_[i].push_back({t.left * n_ + t.right, pool_.id(t.coef)});
      }
      for (const CycloNum& e : a.counit()) counit_.push_back(pool_.id(e));
    }
    if (a.has_antipode()) {
      for (std::size_t i = 0; i < n_; ++i) antipode_.push_back(intern(a.antipode(i)));
    }
  }

  IVec intern(const SparseVec& v) {
    IVec out;
    for (const Term& t : v) out.push_back({t.index, pool_.id(t.coef)});
    return out;
  }
  [[nodiscard]] SparseVec extern_vec(const IVec& v) const {
    SparseVec out;
    for (const ITerm& t : v) out.push_back({static_cast<std::size_t>(t.index), pool_.value(t.coef)});
    return out;
  }
  [[nodiscard]] std::string show(const IVec& v) const { return src_->format(extern_vec(v)); }
  [[nodiscard]] std::string show2(const IVec& v) const {
    SparseTensor out;
    for (const ITerm& t : v) {
      out.push_back({static_cast<std::size_t>(t.index / n_), static_cast<std::size_t>(t.index % n_), pool_.value(t.coef)});
    }
    return src_->format(out);
  }
  [[nodiscard]] std::string show3(const IVec& v) const {
    SparseTensor3 out;
    const std::uint64_t n2 = n_ * n_;
    for (const ITerm& t : v) {
      out.push_back({static_cast<std::size_t>(t.index / n2), static_cast<std::size_t>((t.index / n_) % n_),
                     static_cast<std::size_t>(t.index % n_), pool_.value(t.coef)});
    }
    return monohopf::format(out, src_->labels());
  }

  [[nodiscard]] std::string labels_of(std::initializer_list<std::size_t> idx) const {
    std::string s;
    for (std::size_t i : idx) {
      if (!s.empty()) s += ", ";
      s += src_->labels()[i];
    }
    return s;
  }

  /// u * v for interned vectors.
  IVec multiply(const IVec& u, const IVec& v) {
    for (const ITerm& a : u) {
      for (const ITerm& b : v) {
        const std::uint32_t c = pool_.mul(a.coef, b.coef);
        for (const ITerm& t : mult_[a.index * n_ + b.index]) acc_.add(t.index, pool_.mul(c, t.coef));
      }
    }
    return acc_.take();
  }

  /// Product in A (x) A of flat-indexed tensors.
  IVec multiply2(const IVec& u, const IVec& v) {
    for (const ITerm& a : u) {
      const std::uint64_t al = a.index / n_;
      const std::uint64_t ar = a.index % n_;
      for (const ITerm& b : v) {
        const IVec& l = mult_[al * n_ + b.index / n_];
        if (l.empty()) continue;
        const IVec& r = mult_[ar * n_ + b.index % n_];
        if (r.empty()) continue;
        const std::uint32_t c = pool_.mul(a.coef, b.coef);
        for (const ITerm& x : l) {
          const std::uint32_t cx = pool_.mul(c, x.coef);
          for (const ITerm& y : r) acc_.add(x.index * n_ + y.index, pool_.mul(cx, y.coef));
        }
      }
    }
    return acc_.take();
  }

  IVec comultiply(const IVec& u) {
    for (const ITerm& a : u) {
      for (const ITerm& t : comult_[a.index]) acc_.add(t.index, pool_.mul(a.coef, t.coef));
    }
    return acc_.take();
  }

  std::uint32_t counit_of(const IVec& u) {
    std::uint32_t s = 0;
    for (const ITerm& a : u) s = pool_.add(s, pool_.mul(a.coef, counit_[a.index]));
    return s;
  }

  IVec scaled(const IVec& u, std::uint32_t c) {
    if (c == 0) return {};
    IVec out;
    for (const ITerm& t : u) out.push_back({t.index, pool_.mul(t.coef, c)});
    return out;
  }

  const FDBialgebra* src_;
  ScalarPool pool_;
  std::size_t n_;
  std::vector<IVec> mult_;
  IVec unit_;
  std::vector<IVec> comult_;
  std::vector<std::uint32_t> counit_;
  std::vector<IVec> antipode_;
  Accumulator acc_{pool_};
};

}  // namespace detail

/// Runs the axiom suites on one shared interned copy of the structure.
class Verifier {
 public:
  explicit Verifier(const FDBialgebra& a) : a_(a), in_(a) {}

  AxiomReport algebra() {
    AxiomReport rep{"algebra"};
    if (!a_.has_algebra()) return not_applicable(rep, "no multiplication");
    const std::size_t n = a_.dim();
    auto& in = in_;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const detail::IVec& ij = in.mult_[i * n + j];
        for (std::size_t k = 0; k < n; ++k) {
          const detail::IVec& jk = in.mult_[j * n + k];
          for (const detail::ITerm& t : ij) {
            for (const detail::ITerm& s : in.mult_[t.index * n + k]) in.acc_.add(s.index, in.pool_.mul(t.coef, s.coef));
          }
          const detail::IVec lhs = in.acc_.take();
          for (const detail::ITerm& t : jk) {
            for (const detail::ITerm& s : in.mult_[i * n + t.index]) in.acc_.add(s.index, in.pool_.mul(t.coef, s.coef));
          }
          const detail::IVec rhs = in.acc_.take();
          ++rep.checks;
          if (lhs != rhs) {
            return fail(rep, "associativity", {i, j, k}, in.show(lhs), in.show(rhs));
          }
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      const detail::IVec b{{i, 1}};
      const detail::IVec l = in.multiply(in.unit_, b);
      const detail::IVec r = in.multiply(b, in.unit_);
      rep.checks += 2;
      if (l != b) return fail(rep, "left unit", {i}, in.show(l), in.show(b));
      if (r != b) return fail(rep, "right unit", {i}, in.show(r), in.show(b));
    }
    return rep;
  }

  AxiomReport coalgebra() {
    AxiomReport rep{"coalgebra"};
    if (!a_.has_coalgebra()) return not_applicable(rep, "no comultiplication");
    const std::size_t n = a_.dim();
    auto& in = in_;
    for (std::size_t i = 0; i < n; ++i) {
      const detail::IVec& d = in.comult_[i];
      for (const detail::ITerm& t : d) {
        const std::uint64_t l = t.index / n;
        const std::uint64_t r = t.index % n;
        for (const detail::ITerm& s : in.comult_[l]) in.acc_.add(s.index * n + r, in.pool_.mul(t.coef, s.coef));
      }
      const detail::IVec lhs = in.acc_.take();
      for (const detail::ITerm& t : d) {
        const std::uint64_t l = t.index / n;
        const std::uint64_t r = t.index % n;
        for (const detail::ITerm& s : in.comult_[r]) in.acc_.add(l * n * n + s.index, in.pool_.mul(t.coef, s.coef));
      }
      const detail::IVec rhs = in.acc_.take();
      ++rep.checks;
      if (lhs != rhs) return fail(rep, "coassociativity", {i}, in.show3(lhs), in.show3(rhs));

      for (const detail::ITerm& t : d) in.acc_.add(t.index % n, in.pool_.mul(t.coef, in.counit_[t.index / n]));
      const detail::IVec left = in.acc_.take();
      for (const detail::ITerm& t : d) in.acc_.add(t.index / n, in.pool_.mul(t.coef, in.counit_[t.index % n]));
      const detail::IVec right = in.acc_.take();
      const detail::IVec b{{i, 1}};
      rep.checks += 2;
      if (left != b) return fail(rep, "left counit", {i}, in.show(left), in.show(b));
      if (right != b) return fail(rep, "right counit", {i}, in.show(right), in.show(b));
    }
    return rep;
  }

  AxiomReport bialgebra() {
    AxiomReport rep{"bialgebra"};
    if (!a_.has_algebra() || !a_.has_coalgebra()) return not_applicable(rep, "needs both structures");
    const std::size_t n = a_.dim();
    auto& in = in_;
    const detail::IVec du = in.comultiply(in.unit_);
    const detail::IVec uu = tensor_square_of_unit();
    ++rep.checks;
    if (du != uu) return fail(rep, "comultiplication preserves unit", {}, in.show2(du), in.show2(uu));
    if (in.counit_of(in.unit_) != 1) {
      return fail(rep, "counit preserves unit", {}, in.pool_.value(in.counit_of(in.unit_)).str(), "1");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const detail::IVec& ij = in.mult_[i * n + j];
        const detail::IVec lhs = in.comultiply(ij);
        const detail::IVec rhs = in.multiply2(in.comult_[i], in.comult_[j]);
        ++rep.checks;
        if (lhs != rhs) return fail(rep, "comultiplicativity", {i, j}, in.show2(lhs), in.show2(rhs));
        const std::uint32_t e = in.counit_of(ij);
        const std::uint32_t f = in.pool_.mul(in.counit_[i], in.counit_[j]);
        ++rep.checks;
        if (e != f) {
          return fail(rep, "counit multiplicativity", {i, j}, in.pool_.value(e).str(), in.pool_.value(f).str());
        }
      }
    }
    return rep;
  }

  AxiomReport antipode() {
    AxiomReport rep{"antipode"};
    if (!a_.has_algebra() || !a_.has_coalgebra()) return not_applicable(rep, "needs both structures");
    if (!a_.has_antipode()) return not_applicable(rep, "no antipode given");
    const std::size_t n = a_.dim();
    auto& in = in_;
    for (std::size_t i = 0; i < n; ++i) {
      const detail::IVec expect = in.scaled(in.unit_, in.counit_[i]);
      for (const detail::ITerm& t : in.comult_[i]) {
        const detail::IVec prod = in.multiply(in.antipode_[t.index / n], {{t.index % n, t.coef}});
        for (const detail::ITerm& s : prod) in.acc_.add(s.index, s.coef);
      }
      const detail::IVec left = in.acc_.take();
      ++rep.checks;
      if (left != expect) return fail(rep, "S(a1)a2 = e(a)1", {i}, in.show(left), in.show(expect));
      for (const detail::ITerm& t : in.comult_[i]) {
        const detail::IVec prod = in.multiply({{t.index / n, t.coef}}, in.antipode_[t.index % n]);
        for (const detail::ITerm& s : prod) in.acc_.add(s.index, s.coef);
      }
      const detail::IVec right = in.acc_.take();
      ++rep.checks;
      if (right != expect) return fail(rep, "a1S(a2) = e(a)1", {i}, in.show(right), in.show(expect));
    }
    return rep;
  }

 private:
  detail::IVec tensor_square_of_unit() {
    const std::size_t n = a_.dim();
    for (const detail::ITerm& a : in_.unit_) {
      for (const detail::ITerm& b : in_.unit_) in_.acc_.add(a.index * n + b.index, in_.pool_.mul(a.coef, b.coef));
    }
    return in_.acc_.take();
  }

  static AxiomReport not_applicable(AxiomReport& rep, std::string why) {
    rep.applicable = false;
    rep.passed = false;
    rep.axiom = std::move(why);
    return rep;
  }
  AxiomReport fail(AxiomReport& rep, std::string axiom, std::initializer_list<std::size_t> idx, std::string lhs,
                   std::string rhs) const {
    rep.passed = false;
    rep.axiom = std::move(axiom);
    rep.witness.assign(idx.begin(), idx.end());
    rep.witness_labels = in_.labels_of(idx);
    rep.lhs = std::move(lhs);
    rep.rhs = std::move(rhs);
    return rep;
  }

  const FDBialgebra& a_;
  detail::Interned in_;
};

inline AxiomReport verify_algebra(const FDBialgebra& a) { return Verifier(a).algebra(); }
inline AxiomReport verify_coalgebra(const FDBialgebra& a) { return Verifier(a).coalgebra(); }
inline AxiomReport verify_bialgebra(const FDBialgebra& a) { return Verifier(a).bialgebra(); }
inline AxiomReport verify_antipode(const FDBialgebra& a) { return Verifier(a).antipode(); }

/// Runs every applicable suite and records the outcome in the flags.
inline VerificationSummary verify_all(FDBialgebra& a) {
  Verifier v(a);
  VerificationSummary s{v.algebra(), v.coalgebra(), v.bialgebra(), v.antipode()};
  auto& f = VerifierAccess::flags(a);
  f.algebra = s.algebra.passed;
  f.coalgebra = s.coalgebra.passed;
  f.bialgebra = s.bialgebra.passed;
  f.antipode = s.antipode.passed;
  return s;
}

}  // namespace monohopf
