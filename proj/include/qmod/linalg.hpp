// Dense exact matrices and row reduction over the rationals or a prime
// field. Reduced row echelon form with exact pivoting; no tolerances.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qmod/scalar.hpp"

namespace qmod {

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldTag f, int rows, int cols)
      : field_(f), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols,
                                               Scalar::zero(f)) {}

  static Matrix identity(FieldTag f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  FieldTag field() const { return field_; }

  Scalar& at(int r, int c) { return a_.at(static_cast<std::size_t>(r) * cols_ + c); }
  const Scalar& at(int r, int c) const {
    return a_.at(static_cast<std::size_t>(r) * cols_ + c);
  }

  bool is_zero() const {
    for (const Scalar& s : a_)
      if (!s.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  Scalar trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
    Scalar s = Scalar::zero(field_);
    for (int i = 0; i < rows_; ++i) s = s + at(i, i);
    return s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.field_ != b.field_) throw std::invalid_argument("matrix: field mismatch");
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix: shape mismatch");
    Matrix r(a.field_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        if (a.at(i, k).is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j)
          r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
      }
    return r;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix: shape mismatch");
    Matrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + b.a_[i];
    return r;
  }

  friend Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix r = a;
    for (Scalar& x : r.a_) x = s * x;
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.a_ == b.a_;
  }

 private:
  FieldTag field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> a_;
};

/// In-place reduction to reduced row echelon form; returns the pivot columns.
inline std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
    const Scalar inv = m.at(row, col).inverse();
    for (int c = col; c < m.cols(); ++c) m.at(row, c) = inv * m.at(row, c);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const Scalar factor = m.at(r, col);
      for (int c = col; c < m.cols(); ++c)
        m.at(r, c) = m.at(r, c) - factor * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

/// Columns span the kernel of m.
inline Matrix nullspace(Matrix m) {
  const std::vector<int> pivots = rref(m);
  std::vector<int> free_cols;
  {
    std::size_t k = 0;
    for (int c = 0; c < m.cols(); ++c) {
      if (k < pivots.size() && pivots[k] == c)
        ++k;
      else
        free_cols.push_back(c);
    }
  }
  Matrix basis(m.field(), m.cols(), static_cast<int>(free_cols.size()));
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    basis.at(free_cols[j], static_cast<int>(j)) = Scalar::one(m.field());
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis.at(pivots[r], static_cast<int>(j)) =
          -m.at(static_cast<int>(r), free_cols[j]);
  }
  return basis;
}

/// Inverse of a square matrix, or nullopt if singular.
inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const int n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Scalar::one(m.field());
  }
  const auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
  return inv;
}

/// Rows of the result are an RREF basis of the row space (canonical form of
/// the subspace the rows of m span).
inline Matrix row_basis(Matrix m) {
  const auto pivots = rref(m);
  Matrix out(m.field(), static_cast<int>(pivots.size()), m.cols());
  for (int r = 0; r < out.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, c);
  return out;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || a.field() != b.field())
    throw std::invalid_argument("vstack: shape mismatch");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) out.at(a.rows() + r, c) = b.at(r, c);
  return out;
}

}  // namespace qmod
