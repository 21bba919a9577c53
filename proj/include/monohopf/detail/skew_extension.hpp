#pragma once

// Normal-form construction shared by A(n,d,mu,q) and A(alpha): the Hopf
// algebra generated by a finite group G and x with
//   x^d = mu (1 - g^d),  x h = chi(h) h x,  Delta(x) = x (x) 1 + g (x) x.
// Basis h x^j (h in G, 0 <= j < d) at index h * d + j.

#include <cstddef>
#include <string>
#include <vector>

#include "monohopf/bialgebra.hpp"

namespace monohopf {

/// Which formula is used for S(x). Only minus_ginv_x satisfies the antipode
/// identities; the other two are kept so the failure can be demonstrated.
enum class XAntipode { minus_ginv_x, minus_x_ginv, plus_ginv_x };

namespace detail {

struct SkewExtensionData {
  std::vector<std::vector<std::size_t>> table;  // group multiplication
  std::size_t identity = 0;
  std::size_t g = 0;
  std::vector<CycloNum> chi;  // chi(h) per element
  CycloNum mu;
  std::size_t d = 2;
  std::vector<std::string> group_labels;  // "" for the identity
  XAntipode antipode = XAntipode::minus_ginv_x;
};

inline std::string skew_label(const std::string& h, std::size_t j) {
  std::string xs = j == 0 ? "" : (j == 1 ? "x" : "x^" + std::to_string(j));
  if (h.empty()) return xs.empty() ? "1" : xs;
  return xs.empty() ? h : h + "*" + xs;
}

inline FDBialgebra build_skew_extension(const SkewExtensionData& s) {
  const std::size_t order = s.table.size();
  const std::size_t d = s.d;
  long cond = s.mu.conductor();
  for (const auto& c : s.chi) cond = std::lcm(cond, c.conductor());

  std::vector<std::string> labels;
  for (std::size_t h = 0; h < order; ++h) {
    for (std::size_t j = 0; j < d; ++j) labels.push_back(skew_label(s.group_labels.at(h), j));
  }
  FDBialgebra a(order * d, cond, std::move(labels));
  const CycloNum one = CycloNum::one(cond);
  const CycloNum mu = s.mu.embed(cond);

  // gd = g^d
  std::size_t gd = s.identity;
  for (std::size_t k = 0; k < d; ++k) gd = s.table[gd][s.g];

  std::vector<std::vector<CycloNum>> chi_pow(order);
  for (std::size_t h = 0; h < order; ++h) {
    CycloNum c = one;
    for (std::size_t i = 0; i < d; ++i) {
      chi_pow[h].push_back(c);
      c = c * s.chi[h].embed(cond);
    }
  }

  for (std::size_t h1 = 0; h1 < order; ++h1) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t h2 = 0; h2 < order; ++h2) {
        for (std::size_t j = 0; j < d; ++j) {
          const CycloNum c = chi_pow[h2][i];
          const std::size_t h = s.table[h1][h2];
          SparseVec v;
          if (i + j < d) {
            v.push_back({h * d + i + j, c});
          } else if (!mu.is_zero()) {
            const std::size_t k = i + j - d;
            v.push_back({h * d + k, c * mu});
            v.push_back({s.table[h][gd] * d + k, -(c * mu)});
          }
          a.set_product(h1 * d + i, h2 * d + j, std::move(v));
        }
      }
    }
  }
  a.set_unit(basis_vector(s.identity * d, cond));

  // Delta(h x^j) = Delta(h x^(j-1)) Delta(x); epsilon(h x^j) = [j = 0].
  const SparseTensor dx{{1 + s.identity * d, s.identity * d, one}, {s.g * d, s.identity * d + 1, one}};
  std::vector<CycloNum> eps(order * d, CycloNum::zero(cond));
  for (std::size_t h = 0; h < order; ++h) {
    SparseTensor cur{{h * d, h * d, one}};
    a.set_coproduct(h * d, cur);
    eps[h * d] = one;
    for (std::size_t j = 1; j < d; ++j) {
      cur = a.multiply(cur, normalize(dx));
      a.set_coproduct(h * d + j, cur);
    }
  }
  a.set_counit(std::move(eps));

  // S(h) = h^-1, S(h x^j) = S(x) S(h x^(j-1)).
  std::vector<std::size_t> inv(order);
  for (std::size_t h = 0; h < order; ++h) {
    for (std::size_t k = 0; k < order; ++k) {
      if (s.table[h][k] == s.identity) inv[h] = k;
    }
  }
  const SparseVec ginv_x{{inv[s.g] * d + 1, one}};
  SparseVec sx;
  switch (s.antipode) {
    case XAntipode::minus_ginv_x:
      sx = scale(ginv_x, -one);
      break;
    case XAntipode::plus_ginv_x:
      sx = ginv_x;
      break;
    case XAntipode::minus_x_ginv:
      sx = scale(a.multiply(a.basis(s.identity * d + 1), a.basis(inv[s.g] * d)), -one);
      break;
  }
  for (std::size_t h = 0; h < order; ++h) {
    SparseVec cur = a.basis(inv[h] * d);
    a.set_antipode(h * d, cur);
    for (std::size_t j = 1; j < d; ++j) {
      cur = a.multiply(sx, cur);
      a.set_antipode(h * d + j, cur);
    }
  }
  return a;
}

}  // namespace detail
}  // namespace monohopf
