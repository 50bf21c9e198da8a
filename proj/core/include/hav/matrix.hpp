#pragma once

// Dense matrices over an exact field and the row-reduction kernel used by
// every module. Pivoting is deterministic: columns are scanned in the given
// order and the first row holding a nonzero entry becomes the pivot row.

#include <cassert>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hav/errors.hpp"
#include "hav/rational.hpp"

namespace hav {

template <class T>
concept ExactField = requires(const T& a, const T& b) {
  { a + b };
  { a - b };
  { a * b };
  { a / b };
  { -a };
  { is_zero(a) } -> std::convertible_to<bool>;
  { zero_like(a) } -> std::convertible_to<T>;
  { one_like(a) } -> std::convertible_to<T>;
};

template <class T>
using Vec = std::vector<T>;

template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& zero)
      : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

  static Matrix identity(std::size_t n, const T& zero) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(zero);
    return m;
  }

  /// Builds a rows x cols.size() matrix whose columns are the given vectors.
  static Matrix from_columns(std::size_t rows, const std::vector<Vec<T>>& cols, const T& zero) {
    Matrix m(rows, cols.size(), zero);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T& zero() const { return zero_; }

  T& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const T& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  Vec<T> column(std::size_t c) const {
    Vec<T> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }

  std::vector<Vec<T>> columns() const {
    std::vector<Vec<T>> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  Vec<T> apply(std::span<const T> v) const {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    Vec<T> out(rows_, zero_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) {
        const T& a = (*this)(r, c);
        if (!is_zero(a) && !is_zero(v[c])) out[r] = out[r] + a * v[c];
      }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
    Matrix out(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (!is_zero(bkj)) out(i, j) = out(i, j) + aik * bkj;
        }
      }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Columns of `a` followed by columns of `b`.
  friend Matrix hcat(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "hcat");
    Matrix out(a.rows_, a.cols_ + b.cols_, a.zero_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t c = 0; c < a.cols_; ++c) out(r, c) = a(r, c);
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, a.cols_ + c) = b(r, c);
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  T zero_;
  std::vector<T> data_;
};

template <class T>
struct Echelon {
  Matrix<T> rref;
  /// pivot_columns[i] is the pivot column of row i.
  std::vector<std::size_t> pivot_columns;

  std::size_t rank() const { return pivot_columns.size(); }
};

/// Reduced row echelon form. `column_order`, when given, is the order in
/// which columns are offered as pivot candidates (a permutation of 0..cols-1).
template <ExactField T>
Echelon<T> row_reduce(Matrix<T> m, std::span<const std::size_t> column_order = {}) {
  std::vector<std::size_t> order;
  if (column_order.empty()) {
    order.resize(m.cols());
    std::iota(order.begin(), order.end(), std::size_t{0});
  } else {
    order.assign(column_order.begin(), column_order.end());
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c : order) {
    if (row == m.rows()) break;
    std::size_t pr = row;
    while (pr < m.rows() && is_zero(m(pr, c))) ++pr;
    if (pr == m.rows()) continue;
    if (pr != row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pr, k), m(row, k));
    T inv = one_like(m(row, c)) / m(row, c);
    for (std::size_t k = 0; k < m.cols(); ++k)
      if (!is_zero(m(row, k))) m(row, k) = m(row, k) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, c))) continue;
      T f = m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k)
        if (!is_zero(m(row, k))) m(r, k) = m(r, k) - f * m(row, k);
    }
    pivots.push_back(c);
    ++row;
  }
  return Echelon<T>{std::move(m), std::move(pivots)};
}

template <ExactField T>
std::size_t rank(const Matrix<T>& m) {
  return row_reduce(m).rank();
}

/// Basis of the right null space, one column per free variable (free variable
/// set to 1, in increasing column order).
template <ExactField T>
Matrix<T> null_space(const Matrix<T>& m) {
  auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<Vec<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<T> v(m.cols(), m.zero());
    v[f] = one_like(m.zero());
    for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) v[ech.pivot_columns[i]] = -ech.rref(i, f);
    basis.push_back(std::move(v));
  }
  return Matrix<T>::from_columns(m.cols(), basis, m.zero());
}

/// Some solution x of m x = b, or nullopt if the system is inconsistent.
template <ExactField T>
std::optional<Vec<T>> solve(const Matrix<T>& m, std::span<const T> b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "solve");
  Matrix<T> aug(m.rows(), m.cols() + 1, m.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto ech = row_reduce(std::move(aug));
  Vec<T> x(m.cols(), m.zero());
  for (std::size_t i = 0; i < ech.pivot_columns.size(); ++i) {
    if (ech.pivot_columns[i] == m.cols()) return std::nullopt;
    x[ech.pivot_columns[i]] = ech.rref(i, m.cols());
  }
  return x;
}

template <ExactField T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  std::size_t n = m.rows();
  auto ech = row_reduce(hcat(m, Matrix<T>::identity(n, m.zero())));
  if (ech.rank() < n || (n > 0 && ech.pivot_columns[n - 1] >= n)) return std::nullopt;
  Matrix<T> inv(n, n, m.zero());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.rref(r, n + c);
  return inv;
}

/// Determinant by elimination with row swaps tracked.
template <ExactField T>
T determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  std::size_t n = m.rows();
  T det = one_like(m.zero());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = c;
    while (pr < n && is_zero(m(pr, c))) ++pr;
    if (pr == n) return m.zero();
    if (pr != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(pr, k), m(c, k));
      det = -det;
    }
    det = det * m(c, c);
    T inv = one_like(m.zero()) / m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero(m(r, c))) continue;
      T f = m(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) m(r, k) = m(r, k) - f * m(c, k);
    }
  }
  return det;
}

/// Coordinates of v in the span of the columns of `basis` (assumed linearly
/// independent), or nullopt if v is outside the span.
template <ExactField T>
std::optional<Vec<T>> coordinates_in(const Matrix<T>& basis, std::span<const T> v) {
  return solve(basis, v);
}

template <ExactField T>
bool span_contains(const Matrix<T>& basis, std::span<const T> v) {
  return solve(basis, v).has_value();
}

/// True when the column spans of a and b coincide.
template <ExactField T>
bool same_span(const Matrix<T>& a, const Matrix<T>& b) {
  auto ra = rank(a);
  return ra == rank(b) && rank(hcat(a, b)) == ra;
}

/// Columns of `vectors` that extend the (independent) columns of `base` to a
/// basis of span(base, vectors), chosen greedily in the given order.
template <ExactField T>
std::vector<std::size_t> greedy_complement(const Matrix<T>& base, const Matrix<T>& vectors,
                                           std::span<const std::size_t> order = {}) {
  std::vector<std::size_t> ord;
  if (order.empty()) {
    ord.resize(vectors.cols());
    std::iota(ord.begin(), ord.end(), std::size_t{0});
  } else {
    ord.assign(order.begin(), order.end());
  }
  // Pivot on base columns first, then candidates in order; the candidates
  // that become pivots are the complement.
  Matrix<T> all = hcat(base, vectors);
  std::vector<std::size_t> col_order(base.cols());
  std::iota(col_order.begin(), col_order.end(), std::size_t{0});
  for (auto c : ord) col_order.push_back(base.cols() + c);
  auto ech = row_reduce(all, col_order);
  std::vector<std::size_t> picked;
  for (auto c : ech.pivot_columns)
    if (c >= base.cols()) picked.push_back(c - base.cols());
  return picked;
}

template <ExactField T>
Matrix<T> select_columns(const Matrix<T>& m, std::span<const std::size_t> cols) {
  Matrix<T> out(m.rows(), cols.size(), m.zero());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, j) = m(r, cols[j]);
  return out;
}

}  // namespace hav
