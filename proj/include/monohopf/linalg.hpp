#pragma once

// Exact linear algebra over Q(zeta_N).
//
// RowReducer keeps a reduced row echelon basis of the rows fed to it. Each
// row may carry a payload vector that undergoes the same row operations;
// this is how coordinates, map extensions and consistency checks are done
// without a separate solve.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "monohopf/sparse.hpp"

namespace monohopf {

class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, long conductor = 1)
      : rows_(rows), cols_(cols), data_(rows * cols, CycloNum::zero(conductor)) {}

  static Matrix identity(std::size_t n, long conductor = 1) {
    Matrix m(n, n, conductor);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = CycloNum::one(conductor);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  CycloNum& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  [[nodiscard]] const CycloNum& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] SparseVec row(std::size_t r) const {
    SparseVec out;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero()) out.push_back({c, (*this)(r, c)});
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<CycloNum> data_;
};

class RowReducer {
 public:
  explicit RowReducer(std::size_t cols) : cols_(cols) {}

  struct Outcome {
    bool independent;
    SparseVec residual_payload;  // payload left after reducing a dependent row
  };

  /// Reduces (row, payload) against the current basis; keeps it if the row
  /// part stays nonzero.
  Outcome add(SparseVec row, SparseVec payload = {}) {
    reduce(row, payload);
    if (row.empty()) return {false, std::move(payload)};
    const std::size_t p = row.front().index;
    const CycloNum inv = row.front().coef.inverse();
    row = scale(row, inv);
    payload = scale(payload, inv);
    for (auto& [col, r] : rows_) {
      const CycloNum c = coefficient(r.key, p);
      if (c.is_zero()) continue;
      r.key = axpy(r.key, -c, row);
      r.payload = axpy(r.payload, -c, payload);
    }
    rows_.emplace(p, Row{std::move(row), std::move(payload)});
    return {true, {}};
  }

  /// Reduces a copy; empty result means the row is in the span.
  [[nodiscard]] std::pair<SparseVec, SparseVec> reduced(SparseVec row, SparseVec payload = {}) const {
    reduce(row, payload);
    return {std::move(row), std::move(payload)};
  }

  [[nodiscard]] bool in_span(const SparseVec& row) const { return reduced(row).first.empty(); }
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  /// Pivot rows keyed by pivot column.
  [[nodiscard]] const auto& rows() const { return rows_; }

  /// Basis of {v : row . v = 0 for every row added}.
  [[nodiscard]] std::vector<SparseVec> nullspace(long conductor) const {
    std::vector<SparseVec> out;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (rows_.count(f) != 0) continue;
      SparseVec v{{f, CycloNum::one(conductor)}};
      for (const auto& [p, r] : rows_) {
        const CycloNum c = coefficient(r.key, f);
        if (!c.is_zero()) v.push_back({p, -c});
      }
      out.push_back(normalize(std::move(v)));
    }
    return out;
  }

 private:
  struct Row {
    SparseVec key;
    SparseVec payload;
  };

  void reduce(SparseVec& row, SparseVec& payload) const {
    // Pivot rows vanish on every other pivot column, so subtracting one never
    // changes the coefficients at the remaining pivots.
    const SparseVec original = row;
    for (const Term& t : original) {
      auto it = rows_.find(t.index);
      if (it == rows_.end()) continue;
      row = axpy(row, -t.coef, it->second.key);
      payload = axpy(payload, -t.coef, it->second.payload);
    }
  }

  std::size_t cols_;
  std::map<std::size_t, Row> rows_;
};

/// Exact kernel basis; rank + nullity = column count.
inline std::vector<std::vector<CycloNum>> nullspace(const Matrix& m, long conductor = 1) {
  RowReducer red(m.cols());
  long cond = conductor;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) cond = std::lcm(cond, m(r, c).conductor());
  }
  for (std::size_t r = 0; r < m.rows(); ++r) red.add(embed(m.row(r), cond));
  std::vector<std::vector<CycloNum>> out;
  for (const SparseVec& v : red.nullspace(cond)) out.push_back(to_dense(v, m.cols(), cond));
  return out;
}

inline std::size_t rank(const Matrix& m) {
  RowReducer red(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) red.add(m.row(r));
  return red.rank();
}

/// Rank of a family of sparse vectors.
inline std::size_t rank_of(const std::vector<SparseVec>& vecs, std::size_t dim) {
  RowReducer red(dim);
  for (const auto& v : vecs) red.add(v);
  return red.rank();
}

/// Kernel of the linear map sending basis vector k to images[k]: each image
/// is fed as a row carrying e_k, and the payload left over from a dependent
/// row is a kernel vector.
inline std::vector<SparseVec> kernel_of(const std::vector<SparseVec>& images, std::size_t codomain_dim,
                                        long conductor) {
  RowReducer red(codomain_dim);
  std::vector<SparseVec> out;
  for (std::size_t k = 0; k < images.size(); ++k) {
    auto res = red.add(embed(images[k], conductor), basis_vector(k, conductor));
    if (!res.independent) out.push_back(std::move(res.residual_payload));
  }
  return out;
}

/// Coordinates of vectors in a fixed (independent) basis.
class Coordinates {
 public:
  Coordinates(const std::vector<SparseVec>& basis, std::size_t ambient_dim, long conductor)
      : reducer_(ambient_dim), conductor_(conductor), size_(basis.size()) {
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!reducer_.add(basis[k], basis_vector(k, conductor)).independent) {
        throw DomainError("basis vectors are linearly dependent");
      }
    }
  }
  /// Empty when v is outside the span.
  [[nodiscard]] std::optional<SparseVec> of(const SparseVec& v) const {
    auto [rest, payload] = reducer_.reduced(v);
    if (!rest.empty()) return std::nullopt;
    return scale(payload, CycloNum(-1));
  }
  [[nodiscard]] std::size_t size() const { return size_; }

 private:
  RowReducer reducer_;
  long conductor_;
  std::size_t size_;
};

}  // namespace monohopf
