#pragma once

// Quivers, paths, path-coalgebra comultiplication and monomial presentations.
//
// Paths store their arrows in traversal order: arrows[0] is the first arrow
// walked, so the path written alpha_l ... alpha_1 has arrows = {alpha_1, ...}.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "monohopf/rational.hpp"

namespace monohopf {

struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::size_t vertex_count, std::vector<Arrow> arrows)
      : vertices_(vertex_count), arrows_(std::move(arrows)) {
    if (vertices_ == 0) throw DomainError("a quiver needs at least one vertex");
    for (const Arrow& a : arrows_) {
      if (a.source >= vertices_ || a.target >= vertices_) {
        throw DomainError("arrow endpoint out of range");
      }
    }
  }

  [[nodiscard]] std::size_t vertex_count() const { return vertices_; }
  [[nodiscard]] const std::vector<Arrow>& arrows() const { return arrows_; }
  [[nodiscard]] const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }

  [[nodiscard]] std::vector<std::size_t> outgoing(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
      if (arrows_[a].source == v) out.push_back(a);
    }
    return out;
  }
  [[nodiscard]] std::vector<std::size_t> incoming(std::size_t v) const {
    std::vector<std::size_t> in;
    for (std::size_t a = 0; a < arrows_.size(); ++a) {
      if (arrows_[a].target == v) in.push_back(a);
    }
    return in;
  }

  /// Component label per vertex (undirected connectivity), labels 0.. in
  /// order of first vertex.
  [[nodiscard]] std::vector<std::size_t> component_of() const {
    std::vector<std::size_t> parent(vertices_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Arrow& a : arrows_) parent[find(a.source)] = find(a.target);
    std::map<std::size_t, std::size_t> label;
    std::vector<std::size_t> out(vertices_);
    for (std::size_t v = 0; v < vertices_; ++v) {
      auto [it, inserted] = label.emplace(find(v), label.size());
      out[v] = it->second;
    }
    return out;
  }

  /// Disjoint union; vertices and arrows of `other` are shifted after ours.
  [[nodiscard]] Quiver disjoint_union(const Quiver& other) const {
    std::vector<Arrow> arrows = arrows_;
    for (const Arrow& a : other.arrows_) arrows.push_back({a.source + vertices_, a.target + vertices_});
    return Quiver(vertices_ + other.vertices_, std::move(arrows));
  }

  friend bool operator==(const Quiver&, const Quiver&) = default;

 private:
  std::size_t vertices_ = 0;
  std::vector<Arrow> arrows_;
};

/// Z_n: vertices e_0..e_{n-1}, arrow alpha_i: e_i -> e_{i+1 mod n}.
inline Quiver cycle_quiver(std::size_t n) {
  if (n == 0) throw DomainError("cycle_quiver requires n >= 1");
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < n; ++i) arrows.push_back({i, (i + 1) % n});
  return Quiver(n, std::move(arrows));
}

struct Path {
  std::size_t start = 0;            // source vertex (the vertex itself for trivial paths)
  std::vector<std::size_t> arrows;  // traversal order

  [[nodiscard]] std::size_t length() const { return arrows.size(); }
  [[nodiscard]] std::size_t end(const Quiver& q) const {
    return arrows.empty() ? start : q.arrow(arrows.back()).target;
  }
  [[nodiscard]] bool valid_in(const Quiver& q) const {
    if (start >= q.vertex_count()) return false;
    std::size_t at = start;
    for (std::size_t a : arrows) {
      if (a >= q.arrows().size() || q.arrow(a).source != at) return false;
      at = q.arrow(a).target;
    }
    return true;
  }
  /// Contiguous subpath test on arrow sequences.
  [[nodiscard]] bool contains(const Path& sub) const {
    if (sub.arrows.empty() || sub.arrows.size() > arrows.size()) return false;
    return std::search(arrows.begin(), arrows.end(), sub.arrows.begin(), sub.arrows.end()) != arrows.end();
  }
  [[nodiscard]] std::string label() const {
    if (arrows.empty()) return "e" + std::to_string(start);
    std::string s;
    for (std::size_t k = arrows.size(); k-- > 0;) {
      s += "a" + std::to_string(arrows[k]);
      if (k > 0) s += "*";
    }
    return s;
  }

  friend bool operator==(const Path&, const Path&) = default;
  /// Canonical order: length, start vertex, arrow sequence.
  friend bool operator<(const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.start != b.start) return a.start < b.start;
    return a.arrows < b.arrows;
  }
};

inline Path trivial_path(std::size_t vertex) { return Path{vertex, {}}; }

/// p_i^l in Z_n: the path of length l starting at e_i.
inline Path cycle_path(std::size_t n, std::size_t i, std::size_t l) {
  Path p{i % n, {}};
  for (std::size_t k = 0; k < l; ++k) p.arrows.push_back((i + k) % n);
  return p;
}

/// Delta(p) = sum over factorizations p = beta alpha of beta (x) alpha.
/// Returned as (beta, alpha) pairs, from alpha trivial at s(p) to beta trivial
/// at t(p).
inline std::vector<std::pair<Path, Path>> path_comultiply(const Quiver& q, const Path& p) {
  if (!p.valid_in(q)) throw DomainError("path is not valid in its quiver");
  std::vector<std::pair<Path, Path>> out;
  std::size_t vertex = p.start;
  for (std::size_t k = 0; k <= p.length(); ++k) {
    Path alpha{p.start, {p.arrows.begin(), p.arrows.begin() + static_cast<long>(k)}};
    Path beta{vertex, {p.arrows.begin() + static_cast<long>(k), p.arrows.end()}};
    out.emplace_back(std::move(beta), std::move(alpha));
    if (k < p.length()) vertex = q.arrow(p.arrows[k]).target;
  }
  return out;
}

inline Rat path_counit(const Path& p) { return p.arrows.empty() ? Rat(1) : Rat(0); }

/// Quiver plus monomial relations. `bound` N satisfies J^N contained in I.
class MonomialPresentation {
 public:
  MonomialPresentation(Quiver quiver, std::vector<Path> forbidden, std::size_t bound)
      : quiver_(std::move(quiver)), forbidden_(std::move(forbidden)), bound_(bound) {
    validate();
  }

  /// KQ/J^d: every path of length d is forbidden.
  static MonomialPresentation truncated(const Quiver& quiver, std::size_t d) {
    if (d < 2) throw DomainError("truncation J^d needs d >= 2");
    std::vector<Path> forbidden;
    for (std::size_t v = 0; v < quiver.vertex_count(); ++v) extend_all(quiver, Path{v, {}}, d, forbidden);
    return MonomialPresentation(quiver, std::move(forbidden), d);
  }

  [[nodiscard]] const Quiver& quiver() const { return quiver_; }
  [[nodiscard]] const std::vector<Path>& forbidden() const { return forbidden_; }
  [[nodiscard]] std::size_t bound() const { return bound_; }

  [[nodiscard]] bool in_ideal(const Path& p) const {
    if (p.length() >= bound_) return true;
    return std::any_of(forbidden_.begin(), forbidden_.end(), [&](const Path& f) { return p.contains(f); });
  }

 private:
  static void extend_all(const Quiver& q, const Path& p, std::size_t len, std::vector<Path>& out) {
    if (p.length() == len) {
      out.push_back(p);
      return;
    }
    for (std::size_t a : q.outgoing(p.end(q))) {
      Path next = p;
      next.arrows.push_back(a);
      extend_all(q, next, len, out);
    }
  }

  void validate() const {
    if (bound_ < 2) throw DomainError("truncation bound must be at least 2");
    for (const Path& f : forbidden_) {
      if (!f.valid_in(quiver_)) throw DomainError("forbidden path " + f.label() + " is not a path of the quiver");
      if (f.length() < 2) throw DomainError("forbidden path " + f.label() + " has length < 2; ideal not admissible");
    }
    // J^N inside I: every path of length N must contain a forbidden subpath.
    std::vector<Path> top;
    for (std::size_t v = 0; v < quiver_.vertex_count(); ++v) extend_all(quiver_, Path{v, {}}, bound_, top);
    for (const Path& p : top) {
      const bool hit =
          std::any_of(forbidden_.begin(), forbidden_.end(), [&](const Path& f) { return p.contains(f); });
      if (!hit) {
        throw DomainError("path " + p.label() + " of length " + std::to_string(bound_) +
                          " avoids every forbidden path; J^N is not contained in I");
      }
    }
  }

  Quiver quiver_;
  std::vector<Path> forbidden_;
  std::size_t bound_;
};

/// Paths outside I, in canonical order (length, start, arrow sequence).
inline std::vector<Path> monomial_basis(const MonomialPresentation& pres) {
  const Quiver& q = pres.quiver();
  std::vector<Path> layer;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) layer.push_back(trivial_path(v));
  std::vector<Path> basis = layer;
  while (!layer.empty()) {
    std::vector<Path> next;
    for (const Path& p : layer) {
      for (std::size_t a : q.outgoing(p.end(q))) {
        Path ext = p;
        ext.arrows.push_back(a);
        if (!pres.in_ideal(ext)) next.push_back(std::move(ext));
      }
    }
    std::sort(next.begin(), next.end());
    basis.insert(basis.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return basis;
}

struct SocleDimensions {
  std::vector<std::size_t> left;   // dim soc(A e_i): maximal paths starting at i
  std::vector<std::size_t> right;  // dim soc(e_i A): maximal paths ending at i
};

/// A basis path is maximal on the left module side when no arrow can be
/// walked after it, and on the right module side when none can precede it.
inline SocleDimensions socle_dimensions(const MonomialPresentation& pres) {
  const Quiver& q = pres.quiver();
  SocleDimensions out{std::vector<std::size_t>(q.vertex_count()), std::vector<std::size_t>(q.vertex_count())};
  for (const Path& p : monomial_basis(pres)) {
    bool extends_after = false;
    for (std::size_t a : q.outgoing(p.end(q))) {
      Path ext = p;
      ext.arrows.push_back(a);
      if (!pres.in_ideal(ext)) extends_after = true;
    }
    bool extends_before = false;
    for (std::size_t a : q.incoming(p.start)) {
      Path ext{q.arrow(a).source, {a}};
      ext.arrows.insert(ext.arrows.end(), p.arrows.begin(), p.arrows.end());
      if (!pres.in_ideal(ext)) extends_before = true;
    }
    if (!extends_after) ++out.left[p.start];
    if (!extends_before) ++out.right[p.end(q)];
  }
  return out;
}

struct PointAlgebra {
  friend bool operator==(const PointAlgebra&, const PointAlgebra&) = default;
};
struct TruncatedCycle {
  std::size_t n = 0;
  std::size_t d = 0;
  friend bool operator==(const TruncatedCycle&, const TruncatedCycle&) = default;
};
struct NotFrobenius {
  std::string reason;
  friend bool operator==(const NotFrobenius&, const NotFrobenius&) = default;
};
using FrobeniusVerdict = std::variant<PointAlgebra, TruncatedCycle, NotFrobenius>;

struct ComponentVerdict {
  std::vector<std::size_t> vertices;
  FrobeniusVerdict verdict;
};

inline std::string describe(const FrobeniusVerdict& v) {
  if (std::holds_alternative<PointAlgebra>(v)) return "PointAlgebra";
  if (const auto* t = std::get_if<TruncatedCycle>(&v)) {
    return "TruncatedCycle(" + std::to_string(t->n) + ", " + std::to_string(t->d) + ")";
  }
  return "NotFrobenius(" + std::get<NotFrobenius>(v).reason + ")";
}

/// Per connected component: k, KZ_n/J^d, or a witness that the component
/// cannot be Frobenius.
inline std::vector<ComponentVerdict> frobenius_classify(const MonomialPresentation& pres) {
  const Quiver& q = pres.quiver();
  const auto comp = q.component_of();
  const std::size_t ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  const auto basis = monomial_basis(pres);

  std::vector<ComponentVerdict> out;
  for (std::size_t c = 0; c < ncomp; ++c) {
    ComponentVerdict cv;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      if (comp[v] == c) cv.vertices.push_back(v);
    }
    std::size_t arrow_count = 0;
    for (const Arrow& a : q.arrows()) arrow_count += comp[a.source] == c ? 1 : 0;

    if (cv.vertices.size() == 1 && arrow_count == 0) {
      cv.verdict = PointAlgebra{};
      out.push_back(std::move(cv));
      continue;
    }
    std::string reason;
    for (std::size_t v : cv.vertices) {
      const auto outs = q.outgoing(v).size();
      const auto ins = q.incoming(v).size();
      if (outs >= 2) {
        reason = "vertex " + std::to_string(v) + " has " + std::to_string(outs) + " outgoing arrows";
      } else if (ins >= 2) {
        reason = "vertex " + std::to_string(v) + " has " + std::to_string(ins) + " incoming arrows";
      } else if (ins == 0) {
        reason = "vertex " + std::to_string(v) + " is a source";
      } else if (outs == 0) {
        reason = "vertex " + std::to_string(v) + " is a sink";
      }
      if (!reason.empty()) break;
    }
    if (reason.empty()) {
      // Basic cycle: the ideal is J^d iff every vertex has the same longest
      // surviving path.
      std::map<std::size_t, std::size_t> longest;
      for (const Path& p : basis) {
        if (comp[p.start] != c) continue;
        auto& l = longest[p.start];
        l = std::max(l, p.length());
      }
      const std::size_t l0 = longest.begin()->second;
      for (const auto& [v, l] : longest) {
        if (l != l0) {
          reason = "ideal is not a power of the arrow ideal (longest path from vertex " + std::to_string(v) +
                   " has length " + std::to_string(l) + ", from vertex " +
                   std::to_string(longest.begin()->first) + " length " + std::to_string(l0) + ")";
          break;
        }
      }
      if (reason.empty()) {
        cv.verdict = TruncatedCycle{cv.vertices.size(), l0 + 1};
        out.push_back(std::move(cv));
        continue;
      }
    }
    cv.verdict = NotFrobenius{reason};
    out.push_back(std::move(cv));
  }
  return out;
}

struct CofrobeniusResult {
  bool cofrobenius = true;
  MonomialPresentation presentation;  // Z_n with J^d; its basis is C_d(n)
  std::vector<Path> basis;            // p_i^l with linear index i*d + l
};

/// C_d(n): the subcoalgebra of KZ_n^c on paths of length < d.
inline CofrobeniusResult cofrobenius_classify(std::size_t d, std::size_t n) {
  if (d < 2) throw DomainError("C_d(n) needs d >= 2");
  MonomialPresentation pres = MonomialPresentation::truncated(cycle_quiver(n), d);
  std::vector<Path> basis;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < d; ++l) basis.push_back(cycle_path(n, i, l));
  }
  return {true, std::move(pres), std::move(basis)};
}

}  // namespace monohopf
