#pragma once

// Linear maps between FDBialgebras given by their matrices, with exhaustive
// checks that they are algebra/coalgebra/Hopf maps and bijective.

#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monohopf/bialgebra.hpp"
#include "monohopf/linalg.hpp"

namespace monohopf {

struct MapChecks {
  bool algebra_map = false;
  bool coalgebra_map = false;
  bool antipode_map = false;
  bool bijective = false;
  bool injective = false;
};

/// F: source -> target with column k = F(b_k).
struct IsoWitness {
  std::shared_ptr<const FDBialgebra> source;
  std::shared_ptr<const FDBialgebra> target;
  std::vector<SparseVec> columns;
  std::optional<CycloNum> delta;  // rescaling scalar when the map encodes one
  MapChecks checked;              // set only by check_map

  [[nodiscard]] SparseVec apply(const SparseVec& v) const {
    SparseVec acc;
    for (const Term& t : v) {
      for (const Term& s : columns.at(t.index)) acc.push_back({s.index, t.coef * s.coef});
    }
    return normalize(std::move(acc));
  }
};

struct MapReport {
  bool algebra_checked = false;    // both sides carry products
  bool coalgebra_checked = false;  // both sides carry coproducts
  bool antipode_checked = false;
  MapChecks result;
  std::vector<std::string> failures;

  /// Every applicable check passed and the map is bijective.
  [[nodiscard]] bool iso() const {
    return failures.empty() && result.bijective && (!algebra_checked || result.algebra_map) &&
           (!coalgebra_checked || result.coalgebra_map) && (!antipode_checked || result.antipode_map);
  }
  [[nodiscard]] std::string summary() const {
    std::string s = iso() ? "verified" : "FAILED";
    s += " [";
    s += algebra_checked ? (result.algebra_map ? "algebra " : "algebra:no ") : "";
    s += coalgebra_checked ? (result.coalgebra_map ? "coalgebra " : "coalgebra:no ") : "";
    s += antipode_checked ? (result.antipode_map ? "antipode " : "antipode:no ") : "";
    s += result.bijective ? "bijective]" : "not-bijective]";
    for (const auto& f : failures) s += "; " + f;
    return s;
  }
};

/// Exhaustive check of W on every basis pair; records the outcome in
/// W.checked.
inline MapReport check_map(IsoWitness& w) {
  const FDBialgebra& a = *w.source;
  const FDBialgebra& b = *w.target;
  MapReport rep;
  if (w.columns.size() != a.dim()) {
    rep.failures.push_back("matrix has " + std::to_string(w.columns.size()) + " columns, source dimension is " +
                           std::to_string(a.dim()));
    return rep;
  }
  const long m = std::lcm(a.conductor(), b.conductor());
  const FDBialgebra bb = b.embedded(m);
  std::vector<SparseVec> col;
  for (const auto& c : w.columns) col.push_back(embed(c, m));
  auto F = [&](const SparseVec& v) {
    SparseVec acc;
    for (const Term& t : v) {
      for (const Term& s : col[t.index]) acc.push_back({s.index, t.coef * s.coef});
    }
    return normalize(embed(acc, m));
  };

  if (a.has_algebra() && b.has_algebra()) {
    rep.algebra_checked = true;
    bool ok = same(F(a.unit()), bb.unit());
    if (!ok) rep.failures.push_back("unit: F(1) = " + bb.format(F(a.unit())));
    for (std::size_t i = 0; ok && i < a.dim(); ++i) {
      for (std::size_t j = 0; ok && j < a.dim(); ++j) {
        const SparseVec lhs = F(a.product(i, j));
        const SparseVec rhs = bb.multiply(col[i], col[j]);
        if (!same(lhs, rhs)) {
          ok = false;
          rep.failures.push_back("multiplicativity at (" + a.labels()[i] + ", " + a.labels()[j] + "): " +
                                 bb.format(lhs) + " != " + bb.format(rhs));
        }
      }
    }
    rep.result.algebra_map = ok;
  }
  if (a.has_coalgebra() && b.has_coalgebra()) {
    rep.coalgebra_checked = true;
    bool ok = true;
    for (std::size_t i = 0; ok && i < a.dim(); ++i) {
      SparseTensor lhs;
      for (const Term2& t : a.coproduct(i)) {
        for (const Term& x : col[t.left]) {
          for (const Term& y : col[t.right]) lhs.push_back({x.index, y.index, t.coef.embed(m) * x.coef * y.coef});
        }
      }
      lhs = normalize(std::move(lhs));
      const SparseTensor rhs = bb.comultiply(col[i]);
      if (!same(lhs, rhs)) {
        ok = false;
        rep.failures.push_back("comultiplicativity at " + a.labels()[i] + ": " + bb.format(lhs) +
                               " != " + bb.format(rhs));
      }
      if (ok && a.counit()[i] != bb.apply_counit(col[i])) {
        ok = false;
        rep.failures.push_back("counit at " + a.labels()[i]);
      }
    }
    rep.result.coalgebra_map = ok;
  }
  if (a.has_antipode() && b.has_antipode() && rep.coalgebra_checked && rep.algebra_checked) {
    rep.antipode_checked = true;
    bool ok = true;
    for (std::size_t i = 0; ok && i < a.dim(); ++i) {
      const SparseVec lhs = F(a.antipode(i));
      const SparseVec rhs = bb.apply_antipode(col[i]);
      if (!same(lhs, rhs)) {
        ok = false;
        rep.failures.push_back("antipode at " + a.labels()[i] + ": " + bb.format(lhs) + " != " + bb.format(rhs));
      }
    }
    rep.result.antipode_map = ok;
  }
  const std::size_t r = rank_of(col, b.dim());
  rep.result.injective = r == a.dim();
  rep.result.bijective = rep.result.injective && a.dim() == b.dim();
  w.checked = rep.result;
  return rep;
}

inline IsoWitness make_witness(const FDBialgebra& a, const FDBialgebra& b, std::vector<SparseVec> columns) {
  return IsoWitness{std::make_shared<const FDBialgebra>(a), std::make_shared<const FDBialgebra>(b),
                    std::move(columns), std::nullopt, {}};
}

/// Extends generator images multiplicatively: words are explored breadth
/// first from the unit by right multiplication with generators, and every
/// new word is reduced jointly with its image. A word whose source vector
/// is dependent but whose image is not the matching combination means the
/// images violate a relation; the extension then throws.
inline IsoWitness extend_from_generators(const FDBialgebra& a, const FDBialgebra& b,
                                         const std::map<std::size_t, SparseVec>& images) {
  if (!a.has_algebra() || !b.has_algebra()) throw DomainError("extend_from_generators needs two algebras");
  long m = std::lcm(a.conductor(), b.conductor());
  for (const auto& [g, v] : images) {
    for (const Term& t : v) m = std::lcm(m, t.coef.conductor());
  }
  const FDBialgebra aa = a.embedded(m);
  const FDBialgebra bb = b.embedded(m);
  std::map<std::size_t, SparseVec> img;
  for (const auto& [g, v] : images) {
    if (g >= a.dim()) throw DomainError("generator index out of range");
    img[g] = normalize(embed(v, m));
  }

  struct Word {
    SparseVec src;
    SparseVec dst;
    std::string name;
  };
  RowReducer red(a.dim());
  std::deque<Word> queue;
  auto consider = [&](Word w) {
    auto res = red.add(w.src, w.dst);
    if (res.independent) {
      queue.push_back(std::move(w));
    } else if (!res.residual_payload.empty()) {
      throw DomainError("generator images are not well defined: the word " + w.name +
                        " is forced to two different images (discrepancy " + bb.format(res.residual_payload) +
                        ")");
    }
  };
  consider({aa.unit(), bb.unit(), "1"});
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (const auto& [g, v] : img) {
      Word next{aa.multiply(w.src, aa.basis(g)), bb.multiply(w.dst, v),
                (w.name == "1" ? "" : w.name + "*") + a.labels()[g]};
      consider(std::move(next));
    }
  }
  if (red.rank() != a.dim()) {
    throw DomainError("the given generators span only " + std::to_string(red.rank()) + " of " +
                      std::to_string(a.dim()) + " dimensions");
  }
  std::vector<SparseVec> cols(a.dim());
  for (const auto& [pivot, row] : red.rows()) cols[pivot] = row.payload;
  return IsoWitness{std::make_shared<const FDBialgebra>(aa), std::make_shared<const FDBialgebra>(bb),
                    std::move(cols), std::nullopt, {}};
}

}  // namespace monohopf
