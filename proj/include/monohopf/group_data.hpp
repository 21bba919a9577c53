#pragma once

// Group data (G, g, chi, mu) and the Hopf algebras A(alpha) they generate:
// validation, isomorphism, the datum induced by a pointed Hopf algebra,
// splitting off K[N], and the coalgebra shape.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monohopf/hopf_families.hpp"
#include "monohopf/morphism.hpp"
#include "monohopf/structure.hpp"
#include "monohopf/verify.hpp"

namespace monohopf {

using CayleyTable = std::vector<std::vector<std::size_t>>;

class FiniteGroup {
 public:
  FiniteGroup() : FiniteGroup(CayleyTable{{0}}) {}

  /// Verifies closure, associativity, identity and inverses.
  explicit FiniteGroup(CayleyTable table, std::vector<std::string> labels = {})
      : table_(std::move(table)), labels_(std::move(labels)) {
    const std::size_t n = table_.size();
    if (n == 0) throw DomainError("a group needs at least one element");
    for (const auto& row : table_) {
      if (row.size() != n) throw DomainError("Cayley table is not square");
      for (std::size_t v : row) {
        if (v >= n) throw DomainError("Cayley table entry out of range");
      }
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
      if (ok) {
        identity_ = e;
        found = true;
      }
    }
    if (!found) throw DomainError("Cayley table has no identity");
    inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
      }
      if (inverse_[a] == n) throw DomainError("element " + std::to_string(a) + " has no inverse");
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
            throw DomainError("Cayley table is not associative at (" + std::to_string(a) + ", " +
                              std::to_string(b) + ", " + std::to_string(c) + ")");
          }
        }
      }
    }
    if (labels_.empty()) {
      for (std::size_t a = 0; a < n; ++a) labels_.push_back("h" + std::to_string(a));
    }
    if (labels_.size() != n) throw DomainError("label count does not match group order");
  }

  /// Z_m1 x ... x Z_mk, elements in mixed radix (last factor fastest).
  static FiniteGroup abelian(const std::vector<long>& factors) {
    std::size_t n = 1;
    for (long m : factors) {
      if (m < 1) throw DomainError("cyclic factor must be positive");
      n *= static_cast<std::size_t>(m);
    }
    std::vector<std::vector<long>> digits(n);
    for (std::size_t a = 0; a < n; ++a) digits[a] = decode(a, factors);
    CayleyTable t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::vector<long> s(factors.size());
        for (std::size_t k = 0; k < factors.size(); ++k) s[k] = (digits[a][k] + digits[b][k]) % factors[k];
        t[a][b] = encode(s, factors);
      }
    }
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
      if (factors.size() == 1) {
        labels.push_back(std::to_string(digits[a][0]));
        continue;
      }
      std::string s = "(";
      for (std::size_t k = 0; k < factors.size(); ++k) s += (k ? "," : "") + std::to_string(digits[a][k]);
      labels.push_back(s + ")");
    }
    FiniteGroup g(std::move(t), std::move(labels));
    g.factors_ = factors;
    return g;
  }
  static FiniteGroup cyclic(long n) { return abelian({n}); }

  [[nodiscard]] std::size_t order() const { return table_.size(); }
  [[nodiscard]] const CayleyTable& table() const { return table_; }
  [[nodiscard]] std::size_t identity() const { return identity_; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const std::vector<long>& abelian_factors() const { return factors_; }  // empty unless abelian()
  [[nodiscard]] std::size_t mul(std::size_t a, std::size_t b) const { return table_.at(a).at(b); }
  [[nodiscard]] std::size_t inverse(std::size_t a) const { return inverse_.at(a); }
  [[nodiscard]] std::size_t power(std::size_t a, long k) const {
    std::size_t r = identity_;
    const std::size_t base = k < 0 ? inverse(a) : a;
    for (long i = 0; i < (k < 0 ? -k : k); ++i) r = mul(r, base);
    return r;
  }
  [[nodiscard]] long element_order(std::size_t a) const {
    long k = 1;
    for (std::size_t r = a; r != identity_; r = mul(r, a)) ++k;
    return k;
  }
  [[nodiscard]] bool is_central(std::size_t a) const {
    for (std::size_t b = 0; b < order(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
    return true;
  }
  [[nodiscard]] bool is_abelian() const {
    for (std::size_t a = 0; a < order(); ++a) {
      if (!is_central(a)) return false;
    }
    return true;
  }
  /// Sorted elements of the subgroup generated by `gens`.
  [[nodiscard]] std::vector<std::size_t> generated(const std::vector<std::size_t>& gens) const {
    std::vector<bool> in(order(), false);
    std::vector<std::size_t> stack{identity_};
    in[identity_] = true;
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t s : gens) {
        const std::size_t b = mul(a, s);
        if (!in[b]) {
          in[b] = true;
          stack.push_back(b);
        }
      }
    }
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < order(); ++a) {
      if (in[a]) out.push_back(a);
    }
    return out;
  }
  /// Restriction of the table to a subgroup, re-indexed in the given order.
  [[nodiscard]] FiniteGroup subgroup(const std::vector<std::size_t>& elements) const {
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t k = 0; k < elements.size(); ++k) pos[elements[k]] = k;
    CayleyTable t(elements.size(), std::vector<std::size_t>(elements.size()));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < elements.size(); ++a) {
      labels.push_back(labels_[elements[a]]);
      for (std::size_t b = 0; b < elements.size(); ++b) {
        auto it = pos.find(mul(elements[a], elements[b]));
        if (it == pos.end()) throw DomainError("subset is not closed under multiplication");
        t[a][b] = it->second;
      }
    }
    return FiniteGroup(std::move(t), std::move(labels));
  }

 private:
  static std::vector<long> decode(std::size_t a, const std::vector<long>& factors) {
    std::vector<long> d(factors.size());
    for (std::size_t k = factors.size(); k-- > 0;) {
      d[k] = static_cast<long>(a % static_cast<std::size_t>(factors[k]));
      a /= static_cast<std::size_t>(factors[k]);
    }
    return d;
  }
  static std::size_t encode(const std::vector<long>& d, const std::vector<long>& factors) {
    std::size_t a = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) a = a * static_cast<std::size_t>(factors[k]) + static_cast<std::size_t>(d[k]);
    return a;
  }

  CayleyTable table_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> inverse_;
  std::vector<long> factors_;
  std::size_t identity_ = 0;
};

struct GroupDatum {
  FiniteGroup group;
  std::size_t g = 0;
  std::vector<RootOfUnity> chi;  // chi(h) per element
  CycloNum mu;

  [[nodiscard]] long d() const { return chi.at(g).order(); }
  [[nodiscard]] long order_g() const { return group.element_order(g); }
  [[nodiscard]] long conductor() const {
    long m = mu.conductor();
    for (const auto& c : chi) m = std::lcm(m, c.primitive_form().conductor());
    return m;
  }
  [[nodiscard]] std::string str() const {
    std::string s = "(|G|=" + std::to_string(group.order()) + ", g=" + group.labels()[g] + ", chi=[";
    for (std::size_t h = 0; h < chi.size(); ++h) s += (h ? "," : "") + chi[h].str();
    return s + "], mu=" + mu.str() + ")";
  }
};

/// chi on an abelian group from its values on the cyclic factor generators.
inline std::vector<RootOfUnity> abelian_character(const FiniteGroup& G, const std::vector<RootOfUnity>& on_factors) {
  const auto& f = G.abelian_factors();
  if (f.size() != on_factors.size()) throw DomainError("one character value per cyclic factor is required");
  std::vector<RootOfUnity> out;
  for (std::size_t a = 0; a < G.order(); ++a) {
    RootOfUnity v(1, 0);
    std::size_t rest = a;
    for (std::size_t k = f.size(); k-- > 0;) {
      const long digit = static_cast<long>(rest % static_cast<std::size_t>(f[k]));
      rest /= static_cast<std::size_t>(f[k]);
      v = v * on_factors[k].pow(digit);
    }
    out.push_back(v.primitive_form());
  }
  return out;
}

struct DatumReport {
  std::vector<std::string> violations;
  long d = 0;
  long order_g = 0;
  [[nodiscard]] bool valid() const { return violations.empty(); }
};

/// Every clause checked separately; nothing throws.
inline DatumReport validate_datum(const GroupDatum& a) {
  DatumReport rep;
  const FiniteGroup& G = a.group;
  if (a.g >= G.order()) {
    rep.violations.push_back("g is not an element of G");
    return rep;
  }
  if (a.chi.size() != G.order()) {
    rep.violations.push_back("chi has " + std::to_string(a.chi.size()) + " values for a group of order " +
                             std::to_string(G.order()));
    return rep;
  }
  rep.order_g = G.element_order(a.g);
  rep.d = a.d();
  if (!G.is_central(a.g)) rep.violations.push_back("g = " + G.labels()[a.g] + " is not central");
  if (!(a.chi[G.identity()] == RootOfUnity(1, 0))) rep.violations.push_back("chi(1) != 1");
  for (std::size_t x = 0; x < G.order(); ++x) {
    for (std::size_t y = 0; y < G.order(); ++y) {
      if (!(a.chi[G.mul(x, y)] == a.chi[x] * a.chi[y])) {
        rep.violations.push_back("chi is not multiplicative at (" + G.labels()[x] + ", " + G.labels()[y] + ")");
        x = G.order();
        break;
      }
    }
  }
  if (rep.d < 2) rep.violations.push_back("chi(g) = " + a.chi[a.g].str() + " has order " + std::to_string(rep.d) +
                                          " < 2: the algebra would be a group algebra");
  if (!a.mu.is_zero()) {
    if (rep.order_g == rep.d) {
      rep.violations.push_back("mu != 0 although o(g) = o(chi(g)) = " + std::to_string(rep.d));
    }
    for (std::size_t h = 0; h < G.order(); ++h) {
      if (!(a.chi[h].pow(rep.d) == RootOfUnity(1, 0))) {
        rep.violations.push_back("mu != 0 but chi^" + std::to_string(rep.d) + " != 1 at " + G.labels()[h]);
        break;
      }
    }
  }
  return rep;
}

inline void require_valid(const GroupDatum& a) {
  const DatumReport rep = validate_datum(a);
  if (rep.valid()) return;
  std::string s = "invalid group datum:";
  for (const auto& v : rep.violations) s += " " + v + ";";
  throw DomainError(s);
}

// ---------------------------------------------------------------------------
// A(alpha)

/// Basis h x^j at index h*d + j; S(x) = -g^-1 x unless another form is asked
/// for (the other forms fail the antipode identities).
inline FDBialgebra build_A(const GroupDatum& a, XAntipode form = XAntipode::minus_ginv_x) {
  require_valid(a);
  detail::SkewExtensionData s;
  s.table = a.group.table();
  s.identity = a.group.identity();
  s.g = a.g;
  const long cond = a.conductor();
  for (const auto& c : a.chi) s.chi.push_back(c.value_in(cond));
  s.mu = a.mu.embed(cond);
  s.d = static_cast<std::size_t>(a.d());
  s.group_labels = a.group.labels();
  s.group_labels[a.group.identity()] = "";
  s.antipode = form;
  return detail::build_skew_extension(s);
}

// ---------------------------------------------------------------------------
// Isomorphism of data

struct DatumIso {
  IsoKind kind = IsoKind::not_isomorphic;
  std::vector<std::size_t> f;     // group isomorphism G -> G'
  std::optional<CycloNum> delta;  // mu = delta^d mu'
  std::string reason;

  [[nodiscard]] bool isomorphic() const { return kind == IsoKind::isomorphic; }
  [[nodiscard]] std::string str() const {
    switch (kind) {
      case IsoKind::isomorphic:
        return "isomorphic(delta=" + delta->str() + ")";
      case IsoKind::not_isomorphic:
        return "not-isomorphic (" + reason + ")";
      default:
        return "isomorphic-over-extension (" + reason + ")";
    }
  }
};

inline constexpr std::size_t kMaxGroupOrder = 24;

namespace detail {

/// Greedy generating set: each element is skipped if already generated.
inline std::vector<std::size_t> generators(const FiniteGroup& G) {
  std::vector<std::size_t> gens;
  std::vector<std::size_t> span{G.identity()};
  for (std::size_t a = 0; a < G.order() && span.size() < G.order(); ++a) {
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    gens.push_back(a);
    span = G.generated(gens);
  }
  return gens;
}

/// Extends generator images to a map by words; empty if inconsistent or
/// not a bijective homomorphism.
inline std::optional<std::vector<std::size_t>> extend_hom(const FiniteGroup& G, const FiniteGroup& H,
                                                          const std::vector<std::size_t>& gens,
                                                          const std::vector<std::size_t>& images) {
  const std::size_t none = G.order();
  std::vector<std::size_t> f(G.order(), none);
  f[G.identity()] = H.identity();
  std::vector<std::size_t> stack{G.identity()};
  while (!stack.empty()) {
    const std::size_t a = stack.back();
    stack.pop_back();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::size_t b = G.mul(a, gens[k]);
      const std::size_t fb = H.mul(f[a], images[k]);
      if (f[b] == none) {
        f[b] = fb;
        stack.push_back(b);
      } else if (f[b] != fb) {
        return std::nullopt;
      }
    }
  }
  std::vector<bool> hit(H.order(), false);
  for (std::size_t a = 0; a < G.order(); ++a) {
    if (hit[f[a]]) return std::nullopt;
    hit[f[a]] = true;
  }
  for (std::size_t a = 0; a < G.order(); ++a) {
    for (std::size_t b = 0; b < G.order(); ++b) {
      if (f[G.mul(a, b)] != H.mul(f[a], f[b])) return std::nullopt;
    }
  }
  return f;
}

}  // namespace detail

/// Searches f: G -> G' with f(g) = g' and chi = chi' f by backtracking over
/// generator images, then a delta with mu = delta^d mu'.
inline DatumIso datum_iso(const GroupDatum& a, const GroupDatum& b, long conductor_bound = 48) {
  require_valid(a);
  require_valid(b);
  if (a.group.order() > kMaxGroupOrder || b.group.order() > kMaxGroupOrder) {
    throw DomainError("datum_iso is limited to groups of order <= " + std::to_string(kMaxGroupOrder));
  }
  DatumIso out;
  const FiniteGroup& G = a.group;
  const FiniteGroup& H = b.group;
  if (G.order() != H.order()) {
    out.reason = "|G| = " + std::to_string(G.order()) + " vs " + std::to_string(H.order());
    return out;
  }
  if (a.order_g() != b.order_g()) {
    out.reason = "o(g) = " + std::to_string(a.order_g()) + " vs " + std::to_string(b.order_g());
    return out;
  }
  if (!(a.chi[a.g] == b.chi[b.g])) {
    out.reason = "chi(g) = " + a.chi[a.g].str() + " vs " + b.chi[b.g].str();
    return out;
  }
  if (a.mu.is_zero() != b.mu.is_zero()) {
    out.reason = "mu = 0 on one side only";
    return out;
  }

  const std::vector<std::size_t> gens = detail::generators(G);
  std::vector<std::vector<std::size_t>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (std::size_t h = 0; h < H.order(); ++h) {
      if (H.element_order(h) == G.element_order(gens[k]) && a.chi[gens[k]] == b.chi[h]) candidates[k].push_back(h);
    }
  }
  std::vector<std::size_t> images(gens.size());
  std::optional<std::vector<std::size_t>> found;
  auto search = [&](auto&& self, std::size_t k) -> void {
    if (found) return;
    if (k == gens.size()) {
      auto f = detail::extend_hom(G, H, gens, images);
      if (!f || (*f)[a.g] != b.g) return;
      for (std::size_t h = 0; h < G.order(); ++h) {
        if (!(a.chi[h] == b.chi[(*f)[h]])) return;
      }
      found = std::move(f);
      return;
    }
    for (std::size_t c : candidates[k]) {
      images[k] = c;
      self(self, k + 1);
    }
  };
  search(search, 0);
  if (!found) {
    out.reason = "no group isomorphism with f(g) = g' and chi = chi' f";
    return out;
  }
  out.f = std::move(*found);
  if (a.mu.is_zero()) {
    out.delta = CycloNum(1);
  } else {
    out.delta = detail::dth_root(a.mu / b.mu, a.d(), conductor_bound);
    if (!out.delta) {
      out.kind = IsoKind::isomorphic_over_extension;
      out.reason = "needs delta with delta^" + std::to_string(a.d()) + " = " + (a.mu / b.mu).str() +
                   " of the form t*sqrt(D)*zeta within conductor " + std::to_string(conductor_bound);
      return out;
    }
  }
  out.kind = IsoKind::isomorphic;
  return out;
}

/// The Hopf map A(alpha) -> A(beta) induced by a datum isomorphism:
/// h -> f(h), x -> delta x'.
inline std::pair<IsoWitness, MapReport> datum_iso_witness(const GroupDatum& a, const GroupDatum& b,
                                                          const DatumIso& iso) {
  if (!iso.isomorphic()) throw DomainError("no datum isomorphism to induce a map from");
  const FDBialgebra A = build_A(a);
  const FDBialgebra B = build_A(b);
  const auto d = static_cast<std::size_t>(a.d());
  std::map<std::size_t, SparseVec> images;
  for (std::size_t h = 0; h < a.group.order(); ++h) images[h * d] = basis_vector(iso.f[h] * d, B.conductor());
  images[a.group.identity() * d + 1] = {{b.group.identity() * d + 1, *iso.delta}};
  IsoWitness w = extend_from_generators(A, B, images);
  w.delta = iso.delta;
  MapReport rep = check_map(w);
  return {std::move(w), std::move(rep)};
}

// ---------------------------------------------------------------------------
// The induced datum

struct InducedDatum {
  GroupDatum datum;
  std::vector<std::size_t> grouplikes;  // basis index of each group element
  SparseVec x;
  std::size_t g_candidates = 0;  // group-likes h with dim P_{1,h} = 2
};

/// Reads (G, g, chi, mu) off a pointed non-semisimple Hopf algebra whose
/// group-likes are basis vectors.
inline InducedDatum induced_datum(const FDBialgebra& c) {
  if (!c.has_algebra() || !c.has_coalgebra()) throw DomainError("induced_datum needs a bialgebra");
  const GroupLikes gl = group_likes(c, grouplike_candidates(c));
  if (gl.problem) throw DomainError("group-likes do not form a group: " + *gl.problem);
  if (gl.elements.empty()) throw DomainError("no group-likes found");
  const std::size_t n = gl.elements.size();
  const std::size_t one = gl.elements[gl.identity];
  const long cond = c.conductor();

  InducedDatum out;
  out.grouplikes = gl.elements;
  std::optional<std::size_t> gpos;
  std::vector<SparseVec> pg;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == gl.identity) continue;
    auto p = skew_primitives(c, one, gl.elements[k]);
    if (p.size() == 2) {
      ++out.g_candidates;
      if (!gpos) {
        gpos = k;
        pg = std::move(p);
      }
    }
  }
  if (out.g_candidates == 0) {
    throw DomainError("no nontrivial skew-primitive: every P_{1,h} is spanned by 1 - h (semisimple input?)");
  }
  if (out.g_candidates > 1) {
    throw DomainError("the group-like g with dim P_{1,g} = 2 is not unique (" + std::to_string(out.g_candidates) +
                      " candidates)");
  }
  const std::size_t g = gl.elements[*gpos];

  // x: a vector of P_{1,g} outside span{1 - g}, leading coefficient 1.
  RowReducer red(c.dim());
  red.add(sub(c.basis(one), c.basis(g)));
  for (const SparseVec& v : pg) {
    auto [rest, payload] = red.reduced(embed(v, cond));
    if (!rest.empty()) {
      out.x = scale(rest, rest.front().coef.inverse());
      break;
    }
  }
  if (out.x.empty()) throw DomainError("P_{1,g} has no element outside span{1 - g}");

  std::vector<std::string> labels;
  for (std::size_t e : gl.elements) labels.push_back(c.labels()[e]);
  out.datum.group = FiniteGroup(gl.table, std::move(labels));
  out.datum.g = *gpos;
  for (std::size_t k = 0; k < n; ++k) {
    const SparseVec& h = c.basis(gl.elements[k]);
    const SparseVec xh = c.multiply(out.x, h);
    const SparseVec hx = c.multiply(h, out.x);
    if (hx.empty() || xh.size() != hx.size() || xh.front().index != hx.front().index) {
      throw DomainError("x h is not a multiple of h x at h = " + c.labels()[gl.elements[k]]);
    }
    const CycloNum ratio = xh.front().coef / hx.front().coef;
    if (!same(xh, scale(hx, ratio))) {
      throw DomainError("x h is not a multiple of h x at h = " + c.labels()[gl.elements[k]]);
    }
    auto root = RootOfUnity::recognize(ratio);
    if (!root) throw DomainError("chi(" + c.labels()[gl.elements[k]] + ") = " + ratio.str() + " is not a root of unity");
    out.datum.chi.push_back(*root);
  }
  const long d = out.datum.chi[*gpos].order();
  if (d < 2) throw DomainError("chi(g) = 1: no nilpotent generator");
  const SparseVec xd = c.power(out.x, static_cast<std::size_t>(d));
  const SparseVec gd = c.power(c.basis(g), static_cast<std::size_t>(d));
  const SparseVec base = sub(c.basis(one), gd);
  if (xd.empty()) {
    out.datum.mu = CycloNum(0);
  } else if (base.empty()) {
    throw DomainError("x^d = " + c.format(xd) + " but g^d = 1");
  } else {
    const CycloNum m = coefficient(xd, base.front().index) / base.front().coef;
    if (!same(xd, scale(base, m))) throw DomainError("x^d = " + c.format(xd) + " is not in span{1 - g^d}");
    out.datum.mu = m;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Triviality and tensor splitting

struct Triviality {
  bool trivial = false;
  std::vector<std::size_t> complement;  // N with G = <g> x N, chi|N = 1
  std::size_t subgroups_examined = 0;
};

/// Every subgroup of G, obtained by closing under one more generator at a
/// time; sorted by size, then lexicographically.
inline std::vector<std::vector<std::size_t>> subgroups(const FiniteGroup& G) {
  if (G.order() > kMaxGroupOrder) {
    throw DomainError("subgroup enumeration is limited to groups of order <= " + std::to_string(kMaxGroupOrder));
  }
  auto mask_of = [](const std::vector<std::size_t>& s) {
    std::uint32_t m = 0;
    for (std::size_t a : s) m |= 1U << a;
    return m;
  };
  std::set<std::uint32_t> seen;
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::vector<std::size_t>> frontier{G.generated({})};
  seen.insert(mask_of(frontier[0]));
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& s : frontier) {
      out.push_back(s);
      for (std::size_t h = 0; h < G.order(); ++h) {
        if (std::binary_search(s.begin(), s.end(), h)) continue;
        std::vector<std::size_t> gens = s;
        gens.push_back(h);
        auto t = G.generated(gens);
        if (seen.insert(mask_of(t)).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

inline Triviality is_trivial_datum(const GroupDatum& a) {
  require_valid(a);
  const FiniteGroup& G = a.group;
  const auto cyc = G.generated({a.g});
  Triviality out;
  for (const auto& n : subgroups(G)) {
    ++out.subgroups_examined;
    if (cyc.size() * n.size() != G.order()) continue;
    std::vector<std::size_t> meet;
    std::set_intersection(cyc.begin(), cyc.end(), n.begin(), n.end(), std::back_inserter(meet));
    if (meet.size() != 1) continue;
    bool chi_trivial = true;
    for (std::size_t h : n) chi_trivial = chi_trivial && a.chi[h] == RootOfUnity(1, 0);
    if (!chi_trivial) continue;
    out.trivial = true;
    out.complement = n;
    return out;
  }
  return out;
}

struct TensorSplit {
  FamilyParams params;  // A(o(g), d, mu, chi(g))
  std::vector<std::size_t> complement;
  IsoWitness witness;   // A(alpha) -> A(o(g), d, mu, chi(g)) (x) K[N]
  MapReport report;
};

/// A(alpha) = A(o(g), d, mu, chi(g)) (x) K[N] through g^i n -> g^i (x) n and
/// x -> x (x) 1, verified; throws for nontrivial data.
inline TensorSplit tensor_split_check(const GroupDatum& a) {
  const Triviality t = is_trivial_datum(a);
  if (!t.trivial) throw DomainError("the datum is nontrivial: no complement N with G = <g> x N and chi|N = 1");
  const FiniteGroup& G = a.group;
  TensorSplit out{FamilyParams::make(a.order_g(), a.d(), a.chi[a.g], a.mu), t.complement, {}, {}};
  const FDBialgebra A = build_A(a);
  const FiniteGroup N = G.subgroup(t.complement);
  const FDBialgebra kn = group_algebra(N.table(), N.identity(), N.labels());
  const FDBialgebra T = hopf_tensor(a_n_d_mu_q(out.params), kn);

  const auto d = static_cast<std::size_t>(a.d());
  const std::size_t nn = t.complement.size();
  std::map<std::size_t, SparseVec> images;
  for (long i = 0; i < a.order_g(); ++i) {
    const std::size_t gi = G.power(a.g, i);
    for (std::size_t k = 0; k < nn; ++k) {
      const std::size_t h = G.mul(gi, t.complement[k]);
      images[h * d] = basis_vector(static_cast<std::size_t>(i) * d * nn + k, T.conductor());
    }
  }
  images[G.identity() * d + 1] = basis_vector(1 * nn + N.identity(), T.conductor());
  out.witness = extend_from_generators(A, T, images);
  out.report = check_map(out.witness);
  if (!out.report.iso()) throw DomainError("tensor splitting witness failed: " + out.report.summary());
  return out;
}

// ---------------------------------------------------------------------------
// Coalgebra shape

struct CoalgebraShape {
  std::size_t components = 0;
  std::size_t expected_components = 0;  // [G : <g>]
  std::vector<std::size_t> grouplikes_per_component;
  bool identity_component_cyclic = false;  // equals <g>, g central
  IsoWitness identity_iso;                 // identity component -> C_d(o(g))
  MapReport identity_report;

  [[nodiscard]] bool ok(long order_g) const {
    if (components != expected_components || !identity_component_cyclic || !identity_report.iso()) return false;
    return std::all_of(grouplikes_per_component.begin(), grouplikes_per_component.end(),
                       [&](std::size_t k) { return static_cast<long>(k) == order_g; });
  }
};

/// Link-quiver components of A(alpha) and the coalgebra isomorphism of the
/// identity component onto C_d(o(g)), g^i x^j -> (j!_q) p_i^j.
inline CoalgebraShape coalgebra_shape(const GroupDatum& a) {
  const FDBialgebra A = build_A(a);
  const FiniteGroup& G = a.group;
  const auto d = static_cast<std::size_t>(a.d());
  std::vector<std::size_t> gls;
  for (std::size_t h = 0; h < G.order(); ++h) gls.push_back(h * d);
  const LinkQuiver lq = link_quiver(A, gls);
  const auto comps = coalgebra_components(lq);

  CoalgebraShape out;
  out.components = comps.size();
  out.expected_components = G.order() / static_cast<std::size_t>(a.order_g());
  for (const auto& c : comps) out.grouplikes_per_component.push_back(c.size());
  const auto cyc = G.generated({a.g});
  for (const auto& c : comps) {
    if (std::find(c.begin(), c.end(), G.identity()) == c.end()) continue;
    out.identity_component_cyclic = c == cyc && G.is_central(a.g);
  }

  const long n = a.order_g();
  const FamilyParams p = FamilyParams::make(n, a.d(), a.chi[a.g], CycloNum(0));
  const FDBialgebra cdn = c_d_n_mu_q(p);
  std::vector<std::size_t> subset;
  for (long i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) subset.push_back(G.power(a.g, i) * d + j);
  }
  const FDBialgebra a1 = restrict_coalgebra(A, subset);
  const long cond = std::lcm(a1.conductor(), cdn.conductor());
  const CycloNum q = a.chi[a.g].value_in(cond);
  std::vector<SparseVec> cols;
  for (long i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      cols.push_back({{static_cast<std::size_t>(i) * d + j, q_factorial(static_cast<long>(j), q)}});
    }
  }
  out.identity_iso = make_witness(a1, cdn, std::move(cols));
  out.identity_report = check_map(out.identity_iso);
  return out;
}

// ---------------------------------------------------------------------------
// Catalogue

struct CatalogueGroup {
  std::string name;
  std::vector<long> factors;
};

inline std::vector<CatalogueGroup> catalogue_groups(std::size_t max_order = 12) {
  std::vector<CatalogueGroup> out;
  for (long n = 1; n <= static_cast<long>(max_order); ++n) out.push_back({"Z" + std::to_string(n), {n}});
  const std::vector<CatalogueGroup> extra{{"Z2xZ2", {2, 2}}, {"Z2xZ4", {2, 4}}, {"Z2xZ2xZ2", {2, 2, 2}}};
  for (const auto& e : extra) {
    long o = 1;
    for (long f : e.factors) o *= f;
    if (o <= static_cast<long>(max_order)) out.push_back(e);
  }
  return out;
}

struct CatalogueEntry {
  std::string group;
  GroupDatum datum;
};

/// Every valid datum over the catalogue groups with mu in {0, 1}.
inline std::vector<CatalogueEntry> datum_catalogue(std::size_t max_order = 12) {
  std::vector<CatalogueEntry> out;
  for (const auto& cg : catalogue_groups(max_order)) {
    const FiniteGroup G = FiniteGroup::abelian(cg.factors);
    // all characters: one value per factor generator
    std::vector<std::vector<RootOfUnity>> chars{{}};
    for (long m : cg.factors) {
      std::vector<std::vector<RootOfUnity>> next;
      for (const auto& c : chars) {
        for (long k = 0; k < m; ++k) {
          auto e = c;
          e.push_back(RootOfUnity(m, k));
          next.push_back(std::move(e));
        }
      }
      chars = std::move(next);
    }
    for (std::size_t g = 0; g < G.order(); ++g) {
      for (const auto& c : chars) {
        for (long mu : {0L, 1L}) {
          GroupDatum a{G, g, abelian_character(G, c), CycloNum(mu)};
          if (validate_datum(a).valid()) out.push_back({cg.name, std::move(a)});
        }
      }
    }
  }
  return out;
}

}  // namespace monohopf
