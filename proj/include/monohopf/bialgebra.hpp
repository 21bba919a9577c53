#pragma once

// Finite-dimensional algebras, coalgebras, bialgebras and Hopf algebras as
// sparse structure constants over a single cyclotomic field.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monohopf/sparse.hpp"

namespace monohopf {

/// Which axiom suites verify_all() has confirmed.
struct VerifiedSuites {
  bool algebra = false;
  bool coalgebra = false;
  bool bialgebra = false;
  bool antipode = false;
};

class FDBialgebra {
 public:
  FDBialgebra() = default;
  FDBialgebra(std::size_t dim, long conductor, std::vector<std::string> labels = {})
      : dim_(dim), conductor_(conductor), labels_(std::move(labels)) {
    if (dim_ == 0) throw DomainError("algebra dimension must be positive");
    if (labels_.empty()) {
      for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i));
    }
    if (labels_.size() != dim_) throw DomainError("label count does not match dimension");
  }

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] long conductor() const { return conductor_; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const VerifiedSuites& verified() const { return flags_; }

  [[nodiscard]] bool has_algebra() const { return !mult_.empty(); }
  [[nodiscard]] bool has_coalgebra() const { return !comult_.empty(); }
  [[nodiscard]] bool has_antipode() const { return antipode_.has_value(); }

  // -- construction ---------------------------------------------------------

  void set_product(std::size_t i, std::size_t j, SparseVec v) {
    if (mult_.empty()) mult_.assign(dim_ * dim_, {});
    mult_.at(check(i) * dim_ + check(j)) = normalize(embed_all(std::move(v)));
  }
  void set_unit(SparseVec v) { unit_ = normalize(embed_all(std::move(v))); }
  void set_coproduct(std::size_t i, SparseTensor t) {
    if (comult_.empty()) comult_.assign(dim_, {});
    for (auto& term : t) {
      check(term.left);
      check(term.right);
      term.coef = term.coef.embed(conductor_);
    }
    comult_.at(check(i)) = normalize(std::move(t));
  }
  void set_counit(std::vector<CycloNum> eps) {
    if (eps.size() != dim_) throw DomainError("counit needs one entry per basis element");
    for (auto& e : eps) e = e.embed(conductor_);
    counit_ = std::move(eps);
  }
  /// Column i of the antipode: S(b_i).
  void set_antipode(std::size_t i, SparseVec v) {
    if (!antipode_) antipode_.emplace(dim_);
    antipode_->at(check(i)) = normalize(embed_all(std::move(v)));
  }
  void clear_antipode() { antipode_.reset(); }
  void set_label(std::size_t i, std::string s) { labels_.at(check(i)) = std::move(s); }

  // -- structure ------------------------------------------------------------

  [[nodiscard]] const SparseVec& product(std::size_t i, std::size_t j) const { return mult_.at(i * dim_ + j); }
  [[nodiscard]] const SparseVec& unit() const { return unit_; }
  [[nodiscard]] const SparseTensor& coproduct(std::size_t i) const { return comult_.at(i); }
  [[nodiscard]] const std::vector<CycloNum>& counit() const { return counit_; }
  [[nodiscard]] const SparseVec& antipode(std::size_t i) const { return antipode_->at(i); }

  [[nodiscard]] SparseVec basis(std::size_t i) const { return basis_vector(check(i), conductor_); }

  [[nodiscard]] SparseVec multiply(const SparseVec& u, const SparseVec& v) const {
    SparseVec acc;
    for (const Term& a : u) {
      for (const Term& b : v) {
        const CycloNum c = a.coef * b.coef;
        for (const Term& t : product(a.index, b.index)) acc.push_back({t.index, c * t.coef});
      }
    }
    return normalize(std::move(acc));
  }

  [[nodiscard]] SparseVec power(const SparseVec& u, std::size_t e) const {
    SparseVec r = unit_;
    for (std::size_t k = 0; k < e; ++k) r = multiply(r, u);
    return r;
  }

  [[nodiscard]] SparseTensor comultiply(const SparseVec& u) const {
    SparseTensor acc;
    for (const Term& a : u) {
      for (const Term2& t : coproduct(a.index)) acc.push_back({t.left, t.right, a.coef * t.coef});
    }
    return normalize(std::move(acc));
  }

  [[nodiscard]] CycloNum apply_counit(const SparseVec& u) const {
    CycloNum s = CycloNum::zero(conductor_);
    for (const Term& a : u) {
      if (!counit_[a.index].is_zero()) s += a.coef * counit_[a.index];
    }
    return s;
  }

  [[nodiscard]] SparseVec apply_antipode(const SparseVec& u) const {
    SparseVec acc;
    for (const Term& a : u) {
      for (const Term& t : antipode(a.index)) acc.push_back({t.index, a.coef * t.coef});
    }
    return normalize(std::move(acc));
  }

  /// Product in A (x) A.
  [[nodiscard]] SparseTensor multiply(const SparseTensor& u, const SparseTensor& v) const {
    SparseTensor acc;
    for (const Term2& a : u) {
      for (const Term2& b : v) {
        const SparseVec& l = product(a.left, b.left);
        if (l.empty()) continue;
        const SparseVec& r = product(a.right, b.right);
        if (r.empty()) continue;
        const CycloNum c = a.coef * b.coef;
        for (const Term& x : l) {
          const CycloNum cx = c * x.coef;
          for (const Term& y : r) acc.push_back({x.index, y.index, cx * y.coef});
        }
      }
    }
    return normalize(std::move(acc));
  }

  [[nodiscard]] std::string format(const SparseVec& v) const { return monohopf::format(v, labels_); }
  [[nodiscard]] std::string format(const SparseTensor& v) const { return monohopf::format(v, labels_); }

  /// Same structure with every scalar embedded into conductor m.
  [[nodiscard]] FDBialgebra embedded(long m) const {
    if (m == conductor_) return *this;
    FDBialgebra out(dim_, m, labels_);
    if (has_algebra()) {
      for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) out.set_product(i, j, product(i, j));
      }
      out.set_unit(unit_);
    }
    if (has_coalgebra()) {
      for (std::size_t i = 0; i < dim_; ++i) out.set_coproduct(i, coproduct(i));
      out.set_counit(counit_);
    }
    if (has_antipode()) {
      for (std::size_t i = 0; i < dim_; ++i) out.set_antipode(i, antipode(i));
    }
    return out;
  }

  /// Same data without the coalgebra part (and antipode).
  [[nodiscard]] FDBialgebra algebra_part() const {
    FDBialgebra out(dim_, conductor_, labels_);
    out.mult_ = mult_;
    out.unit_ = unit_;
    return out;
  }

  friend struct VerifierAccess;

 private:
  std::size_t check(std::size_t i) const {
    if (i >= dim_) throw DomainError("basis index " + std::to_string(i) + " out of range");
    return i;
  }
  SparseVec embed_all(SparseVec v) const {
    for (auto& t : v) {
      check(t.index);
      t.coef = t.coef.embed(conductor_);
    }
    return v;
  }

  std::size_t dim_ = 0;
  long conductor_ = 1;
  std::vector<std::string> labels_;
  std::vector<SparseVec> mult_;
  SparseVec unit_;
  std::vector<SparseTensor> comult_;
  std::vector<CycloNum> counit_;
  std::optional<std::vector<SparseVec>> antipode_;
  VerifiedSuites flags_;
};

/// Grants the verifier write access to the verification flags.
struct VerifierAccess {
  static VerifiedSuites& flags(FDBialgebra& a) { return a.flags_; }
};

/// Group algebra K[G] of a group given by its multiplication table.
inline FDBialgebra group_algebra(const std::vector<std::vector<std::size_t>>& table, std::size_t identity,
                                 std::vector<std::string> labels = {}, long conductor = 1) {
  const std::size_t n = table.size();
  if (labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("h" + std::to_string(i));
  }
  FDBialgebra a(n, conductor, std::move(labels));
  std::vector<std::size_t> inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a.set_product(i, j, basis_vector(table[i][j], conductor));
      if (table[i][j] == identity) inv[i] = j;
    }
    a.set_coproduct(i, {{i, i, CycloNum::one(conductor)}});
  }
  a.set_unit(basis_vector(identity, conductor));
  a.set_counit(std::vector<CycloNum>(n, CycloNum::one(conductor)));
  for (std::size_t i = 0; i < n; ++i) a.set_antipode(i, basis_vector(inv[i], conductor));
  return a;
}

/// The one-dimensional Hopf algebra K.
inline FDBialgebra ground_field(long conductor = 1) { return group_algebra({{0}}, 0, {"1"}, conductor); }

}  // namespace monohopf
