#pragma once

// Sparse vectors and tensors over Q(zeta_N): association lists sorted by
// index, never storing a zero coefficient.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "monohopf/cyclotomic.hpp"

namespace monohopf {

struct Term {
  std::size_t index;
  CycloNum coef;
};
using SparseVec = std::vector<Term>;

struct Term2 {
  std::size_t left;
  std::size_t right;
  CycloNum coef;
};
using SparseTensor = std::vector<Term2>;

struct Term3 {
  std::size_t a, b, c;
  CycloNum coef;
};
using SparseTensor3 = std::vector<Term3>;

namespace detail {

template <class T, class Key>
std::vector<T> merge_sorted(std::vector<T> terms, Key key) {
  std::sort(terms.begin(), terms.end(), [&](const T& x, const T& y) { return key(x) < key(y); });
  std::vector<T> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && key(out.back()) == key(t)) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef.is_zero()) out.pop_back();
  return out;
}

}  // namespace detail

/// Sorts, merges duplicate indices and drops zeros.
inline SparseVec normalize(SparseVec v) {
  if (v.size() == 1) {
    if (v[0].coef.is_zero()) v.clear();
    return v;
  }
  return detail::merge_sorted(std::move(v), [](const Term& t) { return t.index; });
}
inline SparseTensor normalize(SparseTensor v) {
  return detail::merge_sorted(std::move(v), [](const Term2& t) { return std::make_pair(t.left, t.right); });
}
inline SparseTensor3 normalize(SparseTensor3 v) {
  return detail::merge_sorted(std::move(v), [](const Term3& t) { return std::make_tuple(t.a, t.b, t.c); });
}

inline SparseVec basis_vector(std::size_t i, long conductor) { return {Term{i, CycloNum::one(conductor)}}; }

inline SparseVec scale(const SparseVec& v, const CycloNum& c) {
  if (c.is_zero()) return {};
  SparseVec out;
  out.reserve(v.size());
  for (const Term& t : v) out.push_back({t.index, t.coef * c});
  return out;
}

/// a + c*b with both inputs sorted.
inline SparseVec axpy(const SparseVec& a, const CycloNum& c, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      out.push_back({b[j].index, c * b[j].coef});
      ++j;
    } else {
      CycloNum s = a[i].coef + c * b[j].coef;
      if (!s.is_zero()) out.push_back({a[i].index, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

inline SparseVec add(const SparseVec& a, const SparseVec& b) { return axpy(a, CycloNum(1), b); }
inline SparseVec sub(const SparseVec& a, const SparseVec& b) { return axpy(a, CycloNum(-1), b); }

inline bool same(const SparseVec& a, const SparseVec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].index != b[i].index || a[i].coef != b[i].coef) return false;
  }
  return true;
}
inline bool same(const SparseTensor& a, const SparseTensor& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].left != b[i].left || a[i].right != b[i].right || a[i].coef != b[i].coef) return false;
  }
  return true;
}
inline bool same(const SparseTensor3& a, const SparseTensor3& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].a != b[i].a || a[i].b != b[i].b || a[i].c != b[i].c || a[i].coef != b[i].coef) return false;
  }
  return true;
}

inline CycloNum coefficient(const SparseVec& v, std::size_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index, [](const Term& t, std::size_t i) { return t.index < i; });
  if (it != v.end() && it->index == index) return it->coef;
  return CycloNum();
}

inline std::vector<CycloNum> to_dense(const SparseVec& v, std::size_t dim, long conductor) {
  std::vector<CycloNum> out(dim, CycloNum::zero(conductor));
  for (const Term& t : v) out.at(t.index) = t.coef;
  return out;
}
inline SparseVec from_dense(const std::vector<CycloNum>& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.push_back({i, v[i]});
  }
  return out;
}

inline SparseVec embed(const SparseVec& v, long conductor) {
  SparseVec out;
  out.reserve(v.size());
  for (const Term& t : v) out.push_back({t.index, t.coef.embed(conductor)});
  return out;
}

inline std::string format_coef_term(const CycloNum& c, const std::string& label, bool first) {
  std::string s = c.str();
  const bool simple = c.is_rational();
  std::string out;
  if (simple && c.rational_part().sign() < 0) {
    out = first ? "-" : " - ";
    s = (-c).str();
  } else if (!first) {
    out = " + ";
  }
  if (s == "1") return out + label;
  if (!simple) s = "(" + s + ")";
  return out + s + "*" + label;
}

inline std::string format(const SparseVec& v, const std::vector<std::string>& labels) {
  if (v.empty()) return "0";
  std::string out;
  for (const Term& t : v) out += format_coef_term(t.coef, labels.at(t.index), out.empty());
  return out;
}
inline std::string format(const SparseTensor& v, const std::vector<std::string>& labels) {
  if (v.empty()) return "0";
  std::string out;
  for (const Term2& t : v) {
    out += format_coef_term(t.coef, labels.at(t.left) + "(x)" + labels.at(t.right), out.empty());
  }
  return out;
}
inline std::string format(const SparseTensor3& v, const std::vector<std::string>& labels) {
  if (v.empty()) return "0";
  std::string out;
  for (const Term3& t : v) {
    out += format_coef_term(t.coef, labels.at(t.a) + "(x)" + labels.at(t.b) + "(x)" + labels.at(t.c), out.empty());
  }
  return out;
}

}  // namespace monohopf
