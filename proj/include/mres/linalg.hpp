#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mres/errors.hpp"
#include "mres/scalar.hpp"

namespace mres {

/// Sparse vector over Q. Invariant: no stored zeros.
using SparseVec = std::map<std::size_t, Scalar>;

/// y += a*x
inline void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (sgn(a) == 0) return;
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, 0);
    it->second += a * v;
    if (sgn(it->second) == 0) y.erase(it);
  }
}

inline void add_entry(SparseVec& y, std::size_t k, const Scalar& v) {
  if (sgn(v) == 0) return;
  auto [it, inserted] = y.try_emplace(k, 0);
  it->second += v;
  if (sgn(it->second) == 0) y.erase(it);
}

inline SparseVec scaled(const SparseVec& x, const Scalar& a) {
  SparseVec r;
  if (sgn(a) == 0) return r;
  for (const auto& [k, v] : x) r.emplace(k, a * v);
  return r;
}

inline Scalar entry(const SparseVec& x, std::size_t k) {
  auto it = x.find(k);
  return it == x.end() ? Scalar(0) : it->second;
}

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return sgn(s) == 0; });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InputError("matrix dimension mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& x = a(i, k);
        if (sgn(x) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
      }
    }
    return r;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix dimension mismatch in sum");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix dimension mismatch in difference");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  std::vector<Scalar> apply(const std::vector<Scalar>& x) const {
    if (x.size() != cols_) throw InputError("vector length mismatch");
    std::vector<Scalar> y(rows_, Scalar(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn((*this)(i, j)) != 0) y[i] += (*this)(i, j) * x[j];
      }
    }
    return y;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of row 0, 1, ...
};

/// Reduced row echelon form. Pivots are chosen left to right, and within a
/// column the first row with a nonzero entry, so the result is deterministic.
inline Rref rref(Matrix m) {
  Rref out;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    }
    const Scalar inv = 1 / m(row, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || sgn(m(i, c)) == 0) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Basis of {x : m x = 0}, one vector per free column.
inline std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
  const auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols(), Scalar(0));
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of a x = b (free variables set to zero), if one exists.
inline std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b) {
  if (b.size() != a.rows()) throw InputError("right-hand side length mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto r = rref(std::move(aug));
  std::vector<Scalar> x(a.cols(), Scalar(0));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == a.cols()) return std::nullopt;
    x[r.pivots[i]] = r.reduced(i, a.cols());
  }
  return x;
}

inline Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const auto r = rref(std::move(aug));
  if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1)) throw InputError("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  }
  return inv;
}

/// Incremental sparse Gauss-Jordan elimination for A x = b.
///
/// Pivot rows are kept fully reduced (no pivot column appears in another
/// pivot row), so the nullspace and a particular solution can be read off
/// directly.
class SparseEliminator {
 public:
  explicit SparseEliminator(std::size_t num_cols) : num_cols_(num_cols) {}

  std::size_t num_cols() const { return num_cols_; }
  std::size_t rank() const { return pivots_.size(); }
  bool consistent() const { return consistent_; }

  void add_row(SparseVec row, Scalar rhs) {
    std::vector<std::size_t> hits;
    for (const auto& [c, v] : row) {
      if (pivots_.count(c)) hits.push_back(c);
    }
    for (auto c : hits) {
      const Scalar f = entry(row, c);
      if (sgn(f) == 0) continue;
      const auto& prow = pivots_.at(c);
      axpy(row, -f, prow.coeffs);
      rhs -= f * prow.rhs;
    }
    if (row.empty()) {
      if (sgn(rhs) != 0) consistent_ = false;
      return;
    }
    const std::size_t p = row.begin()->first;
    const Scalar inv = 1 / row.begin()->second;
    for (auto& [c, v] : row) v *= inv;
    rhs *= inv;
    for (auto& [c, prow] : pivots_) {
      const Scalar f = entry(prow.coeffs, p);
      if (sgn(f) == 0) continue;
      axpy(prow.coeffs, -f, row);
      prow.rhs -= f * rhs;
    }
    pivots_.emplace(p, PivotRow{std::move(row), std::move(rhs)});
  }

  /// Solution with all free variables zero. Requires consistency.
  SparseVec particular() const {
    if (!consistent_) throw PreconditionError("linear system is inconsistent");
    SparseVec x;
    for (const auto& [c, prow] : pivots_) add_entry(x, c, prow.rhs);
    return x;
  }

  /// One basis vector per free column f: x_f = 1, x_p = -row_p[f].
  std::vector<SparseVec> nullspace() const {
    std::map<std::size_t, SparseVec> by_free;
    for (const auto& [c, prow] : pivots_) {
      for (const auto& [f, v] : prow.coeffs) {
        if (f != c) by_free[f].emplace(c, -v);
      }
    }
    std::vector<SparseVec> basis;
    for (std::size_t f = 0; f < num_cols_; ++f) {
      if (pivots_.count(f)) continue;
      SparseVec v;
      auto it = by_free.find(f);
      if (it != by_free.end()) v = it->second;
      v.emplace(f, 1);
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  struct PivotRow {
    SparseVec coeffs;
    Scalar rhs;
  };
  std::size_t num_cols_;
  std::map<std::size_t, PivotRow> pivots_;
  bool consistent_ = true;
};

}  // namespace mres
