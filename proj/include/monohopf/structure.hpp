#pragma once

// Structural computations on FDBialgebra: group-likes, skew-primitives, the
// link quiver, centers, duals, tensor products, restrictions, the monomial
// algebra/coalgebra of a presentation and the Frobenius bilinear-form oracle.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "monohopf/bialgebra.hpp"
#include "monohopf/linalg.hpp"
#include "monohopf/quiver.hpp"

namespace monohopf {

// ---------------------------------------------------------------------------
// Group-likes

struct GroupLikes {
  std::vector<std::size_t> elements;  // basis indices that passed
  // table[a][b] = position (in `elements`) of elements[a] * elements[b];
  // empty when the algebra has no product or the set is not a group.
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;  // position of the unit in `elements`
  std::optional<std::string> problem;
};

/// Verifies candidate basis elements; this is a checker, not a solver for
/// Delta(c) = c (x) c.
inline GroupLikes group_likes(const FDBialgebra& a, const std::vector<std::size_t>& candidates) {
  if (!a.has_coalgebra()) throw DomainError("group_likes needs a coalgebra");
  GroupLikes out;
  for (std::size_t c : candidates) {
    const SparseTensor& d = a.coproduct(c);
    if (d.size() == 1 && d[0].left == c && d[0].right == c && d[0].coef.is_one() && a.counit().at(c).is_one()) {
      out.elements.push_back(c);
    }
  }
  if (!a.has_algebra() || out.elements.empty()) return out;

  std::map<std::size_t, std::size_t> pos;
  for (std::size_t k = 0; k < out.elements.size(); ++k) pos[out.elements[k]] = k;
  const SparseVec& u = a.unit();
  if (u.size() != 1 || !u[0].coef.is_one() || pos.count(u[0].index) == 0) {
    out.problem = "the unit is not among the group-likes";
    return out;
  }
  out.identity = pos[u[0].index];
  std::vector<std::vector<std::size_t>> table(out.elements.size(), std::vector<std::size_t>(out.elements.size()));
  for (std::size_t x = 0; x < out.elements.size(); ++x) {
    for (std::size_t y = 0; y < out.elements.size(); ++y) {
      const SparseVec& p = a.product(out.elements[x], out.elements[y]);
      if (p.size() != 1 || !p[0].coef.is_one() || pos.count(p[0].index) == 0) {
        out.problem = "not closed: " + a.labels()[out.elements[x]] + " * " + a.labels()[out.elements[y]] + " = " +
                      a.format(p);
        return out;
      }
      table[x][y] = pos[p[0].index];
    }
  }
  for (std::size_t x = 0; x < table.size(); ++x) {
    bool has_inverse = false;
    for (std::size_t y = 0; y < table.size(); ++y) has_inverse |= table[x][y] == out.identity;
    if (!has_inverse) {
      out.problem = a.labels()[out.elements[x]] + " has no inverse among the group-likes";
      return out;
    }
  }
  out.table = std::move(table);
  return out;
}

/// Candidates c with a single-term coproduct c (x) c; a convenience for
/// pointed bases where every group-like is a basis vector.
inline std::vector<std::size_t> grouplike_candidates(const FDBialgebra& a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const SparseTensor& d = a.coproduct(i);
    if (d.size() == 1 && d[0].left == i && d[0].right == i) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Skew-primitives and the link quiver

/// Basis of P_{x,y} = {c : Delta(c) = c (x) x + y (x) c} for basis
/// group-likes x, y.
inline std::vector<SparseVec> skew_primitives(const FDBialgebra& a, std::size_t x, std::size_t y) {
  const std::size_t n = a.dim();
  const CycloNum one = CycloNum::one(a.conductor());
  std::vector<SparseVec> images;
  images.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    SparseVec img;
    for (const Term2& t : a.coproduct(k)) img.push_back({t.left * n + t.right, t.coef});
    img.push_back({k * n + x, -one});
    img.push_back({y * n + k, -one});
    images.push_back(normalize(std::move(img)));
  }
  return kernel_of(images, n * n, a.conductor());
}

struct LinkQuiver {
  std::vector<std::size_t> vertices;  // group-like basis indices
  std::vector<std::string> labels;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> multiplicity;  // keyed by positions in vertices

  [[nodiscard]] std::size_t arrows(std::size_t x, std::size_t y) const {
    auto it = multiplicity.find({x, y});
    return it == multiplicity.end() ? 0 : it->second;
  }
  [[nodiscard]] std::size_t arrow_count() const {
    std::size_t s = 0;
    for (const auto& kv : multiplicity) s += kv.second;
    return s;
  }
};

/// Arrow x -> y with multiplicity dim P_{x,y} minus the trivial x - y.
inline LinkQuiver link_quiver(const FDBialgebra& a, const std::vector<std::size_t>& grouplikes) {
  LinkQuiver lq;
  lq.vertices = grouplikes;
  for (std::size_t v : grouplikes) lq.labels.push_back(a.labels()[v]);
  for (std::size_t x = 0; x < grouplikes.size(); ++x) {
    for (std::size_t y = 0; y < grouplikes.size(); ++y) {
      const std::size_t dim = skew_primitives(a, grouplikes[x], grouplikes[y]).size();
      const std::size_t m = dim - (x != y ? 1 : 0);
      if (m > 0) lq.multiplicity[{x, y}] = m;
    }
  }
  return lq;
}

/// Connected components of the link quiver (positions into lq.vertices).
inline std::vector<std::vector<std::size_t>> coalgebra_components(const LinkQuiver& lq) {
  const std::size_t n = lq.vertices.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [xy, m] : lq.multiplicity) parent[find(xy.first)] = find(xy.second);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  for (auto& kv : groups) out.push_back(std::move(kv.second));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Center

/// Basis of {z : z b = b z} where b runs over `against` (all basis vectors
/// when empty; a generating set gives the same answer faster).
inline std::vector<SparseVec> center(const FDBialgebra& a, const std::vector<std::size_t>& against = {}) {
  if (!a.has_algebra()) throw DomainError("center needs a multiplication");
  const std::size_t n = a.dim();
  std::vector<std::size_t> others = against;
  if (others.empty()) {
    others.resize(n);
    std::iota(others.begin(), others.end(), 0);
  }
  std::vector<SparseVec> images;
  for (std::size_t k = 0; k < n; ++k) {
    SparseVec img;
    for (std::size_t i : others) {
      for (const Term& t : a.product(k, i)) img.push_back({i * n + t.index, t.coef});
      for (const Term& t : a.product(i, k)) img.push_back({i * n + t.index, -t.coef});
    }
    images.push_back(normalize(std::move(img)));
  }
  return kernel_of(images, n * n, a.conductor());
}

// ---------------------------------------------------------------------------
// Dual, tensor product, restriction

/// Linear dual on the dual basis: products come from coproducts and vice
/// versa; the antipode is transposed.
inline FDBialgebra dual(const FDBialgebra& a) {
  const std::size_t n = a.dim();
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l + "*");
  FDBialgebra out(n, a.conductor(), std::move(labels));
  if (a.has_coalgebra()) {
    std::vector<SparseVec> prod(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (const Term2& t : a.coproduct(i)) prod[t.left * n + t.right].push_back({i, t.coef});
    }
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) out.set_product(j, k, prod[j * n + k]);
    }
    out.set_unit(from_dense(a.counit()));
  }
  if (a.has_algebra()) {
    std::vector<SparseTensor> cop(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (const Term& t : a.product(i, j)) cop[t.index].push_back({i, j, t.coef});
      }
    }
    for (std::size_t k = 0; k < n; ++k) out.set_coproduct(k, cop[k]);
    out.set_counit(to_dense(a.unit(), n, a.conductor()));
  }
  if (a.has_antipode()) {
    std::vector<SparseVec> s(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (const Term& t : a.antipode(j)) s[t.index].push_back({j, t.coef});
    }
    for (std::size_t i = 0; i < n; ++i) out.set_antipode(i, s[i]);
  }
  return out;
}

/// Equality of every structure tensor (labels ignored).
inline bool same_structure(const FDBialgebra& a, const FDBialgebra& b) {
  if (a.dim() != b.dim() || a.has_algebra() != b.has_algebra() || a.has_coalgebra() != b.has_coalgebra() ||
      a.has_antipode() != b.has_antipode()) {
    return false;
  }
  const long m = std::lcm(a.conductor(), b.conductor());
  const std::size_t n = a.dim();
  auto eqv = [m](const SparseVec& x, const SparseVec& y) { return same(embed(x, m), embed(y, m)); };
  if (a.has_algebra()) {
    if (!eqv(a.unit(), b.unit())) return false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!eqv(a.product(i, j), b.product(i, j))) return false;
      }
    }
  }
  if (a.has_coalgebra()) {
    for (std::size_t i = 0; i < n; ++i) {
      const SparseTensor& x = a.coproduct(i);
      const SparseTensor& y = b.coproduct(i);
      if (x.size() != y.size()) return false;
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k].left != y[k].left || x[k].right != y[k].right || x[k].coef != y[k].coef) return false;
      }
      if (a.counit()[i] != b.counit()[i]) return false;
    }
  }
  if (a.has_antipode()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!eqv(a.antipode(i), b.antipode(i))) return false;
    }
  }
  return true;
}

/// A (x) B with basis a_i (x) b_j at index i * dim(B) + j.
inline FDBialgebra hopf_tensor(const FDBialgebra& a, const FDBialgebra& b) {
  const long m = std::lcm(a.conductor(), b.conductor());
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  std::vector<std::string> labels;
  for (const auto& la : a.labels()) {
    for (const auto& lb : b.labels()) labels.push_back(la + "|" + lb);
  }
  FDBialgebra out(na * nb, m, std::move(labels));
  auto pair_vec = [&](const SparseVec& x, const SparseVec& y) {
    SparseVec v;
    for (const Term& s : x) {
      for (const Term& t : y) v.push_back({s.index * nb + t.index, s.coef * t.coef});
    }
    return v;
  };
  if (a.has_algebra() && b.has_algebra()) {
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t j = 0; j < nb; ++j) {
        for (std::size_t k = 0; k < na; ++k) {
          for (std::size_t l = 0; l < nb; ++l) {
            out.set_product(i * nb + j, k * nb + l, pair_vec(a.product(i, k), b.product(j, l)));
          }
        }
      }
    }
    out.set_unit(pair_vec(a.unit(), b.unit()));
  }
  if (a.has_coalgebra() && b.has_coalgebra()) {
    std::vector<CycloNum> eps;
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t j = 0; j < nb; ++j) {
        SparseTensor t;
        for (const Term2& x : a.coproduct(i)) {
          for (const Term2& y : b.coproduct(j)) {
            t.push_back({x.left * nb + y.left, x.right * nb + y.right, x.coef * y.coef});
          }
        }
        out.set_coproduct(i * nb + j, std::move(t));
        eps.push_back(a.counit()[i] * b.counit()[j]);
      }
    }
    out.set_counit(std::move(eps));
  }
  if (a.has_antipode() && b.has_antipode()) {
    for (std::size_t i = 0; i < na; ++i) {
      for (std::size_t j = 0; j < nb; ++j) out.set_antipode(i * nb + j, pair_vec(a.antipode(i), b.antipode(j)));
    }
  }
  return out;
}

/// The coalgebra spanned by a subset of basis vectors; throws unless the
/// span is a subcoalgebra.
inline FDBialgebra restrict_coalgebra(const FDBialgebra& a, const std::vector<std::size_t>& subset) {
  std::map<std::size_t, std::size_t> pos;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < subset.size(); ++k) {
    pos[subset[k]] = k;
    labels.push_back(a.labels().at(subset[k]));
  }
  FDBialgebra out(subset.size(), a.conductor(), std::move(labels));
  std::vector<CycloNum> eps;
  for (std::size_t k = 0; k < subset.size(); ++k) {
    SparseTensor t;
    for (const Term2& x : a.coproduct(subset[k])) {
      if (pos.count(x.left) == 0 || pos.count(x.right) == 0) {
        throw DomainError("span is not a subcoalgebra: " + a.labels()[subset[k]] + " has a term outside");
      }
      t.push_back({pos[x.left], pos[x.right], x.coef});
    }
    out.set_coproduct(k, std::move(t));
    eps.push_back(a.counit()[subset[k]]);
  }
  out.set_counit(std::move(eps));
  return out;
}

// ---------------------------------------------------------------------------
// Monomial algebras and coalgebras

/// KQ/I on the basis of paths outside I; p * q is "q then p".
inline FDBialgebra monomial_algebra(const MonomialPresentation& pres) {
  const auto basis = monomial_basis(pres);
  const Quiver& q = pres.quiver();
  std::map<Path, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    index[basis[k]] = k;
    labels.push_back(basis[k].label());
  }
  FDBialgebra out(basis.size(), 1, std::move(labels));
  SparseVec unit;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Path& p = basis[k];
    if (p.length() == 0) unit.push_back({k, CycloNum(1)});
    for (std::size_t l = 0; l < basis.size(); ++l) {
      const Path& r = basis[l];
      if (r.end(q) != p.start) continue;
      Path cat{r.start, r.arrows};
      cat.arrows.insert(cat.arrows.end(), p.arrows.begin(), p.arrows.end());
      if (pres.in_ideal(cat)) continue;
      out.set_product(k, l, basis_vector(index.at(cat), 1));
    }
  }
  if (!out.has_algebra()) {
    for (std::size_t k = 0; k < basis.size(); ++k) out.set_product(k, k, {});
  }
  out.set_unit(std::move(unit));
  return out;
}

/// The subcoalgebra of KQ^c spanned by the paths outside I.
inline FDBialgebra path_coalgebra(const MonomialPresentation& pres) {
  const auto basis = monomial_basis(pres);
  const Quiver& q = pres.quiver();
  std::map<Path, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    index[basis[k]] = k;
    labels.push_back(basis[k].label());
  }
  FDBialgebra out(basis.size(), 1, std::move(labels));
  std::vector<CycloNum> eps;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    SparseTensor t;
    for (const auto& [beta, alpha] : path_comultiply(q, basis[k])) {
      t.push_back({index.at(beta), index.at(alpha), CycloNum(1)});
    }
    out.set_coproduct(k, std::move(t));
    eps.emplace_back(path_counit(basis[k]));
  }
  out.set_counit(std::move(eps));
  return out;
}

// ---------------------------------------------------------------------------
// Frobenius oracle

enum class OracleVerdict { frobenius, not_frobenius, inconclusive };

inline const char* to_string(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::frobenius:
      return "frobenius";
    case OracleVerdict::not_frobenius:
      return "not-frobenius";
    default:
      return "inconclusive";
  }
}

struct OracleResult {
  OracleVerdict verdict = OracleVerdict::inconclusive;
  std::vector<long long> functional;  // the certifying f when frobenius
  int trials_used = 0;
};

/// Samples f with entries in [-3, 3]; a nondegenerate form (a, b) -> f(ab)
/// certifies Frobenius. One-sided: never answers not-frobenius.
inline OracleResult frobenius_oracle(const FDBialgebra& a, int trials, std::uint64_t seed) {
  if (!a.has_algebra()) throw DomainError("frobenius_oracle needs a multiplication");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> coef(-3, 3);
  const std::size_t n = a.dim();
  OracleResult res;
  for (int t = 0; t < trials; ++t) {
    res.trials_used = t + 1;
    std::vector<long long> f(n);
    for (auto& x : f) x = coef(rng);
    RowReducer red(n);
    for (std::size_t i = 0; i < n; ++i) {
      SparseVec row;
      for (std::size_t j = 0; j < n; ++j) {
        CycloNum s = CycloNum::zero(a.conductor());
        for (const Term& term : a.product(i, j)) {
          if (f[term.index] != 0) s += term.coef * CycloNum(f[term.index]);
        }
        if (!s.is_zero()) row.push_back({j, s});
      }
      red.add(std::move(row));
    }
    if (red.rank() == n) {
      res.verdict = OracleVerdict::frobenius;
      res.functional = std::move(f);
      return res;
    }
  }
  return res;
}

}  // namespace monohopf
