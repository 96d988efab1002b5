#pragma once

// Dense exact matrices and the echelon-form toolkit built on them.

#include <optional>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace jgl {

class Matrix {
 public:
  Matrix() = default;
  Matrix(const Ring& ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, ring.zero()) {}

  static Matrix identity(const Ring& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
  }

  /// Builds from nested rows; every row must have the same length.
  static Matrix from_rows(const Ring& ring, const std::vector<Vector>& rows, std::size_t cols_if_empty = 0) {
    std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    Matrix m(ring, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_ints(const Ring& ring, const std::vector<std::vector<long long>>& rows) {
    std::vector<Vector> conv;
    for (const auto& r : rows) {
      Vector v;
      for (long long x : r) v.push_back(ring.from_int(x));
      conv.push_back(std::move(v));
    }
    return from_rows(ring, conv);
  }

  /// Column matrix from a vector.
  static Matrix column(const Ring& ring, const Vector& v) {
    Matrix m(ring, v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  static Matrix from_columns(const Ring& ring, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(ring, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw Error("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Scalar>& data() const { return data_; }

  Vector row(std::size_t i) const { return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }
  Vector col(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }

  std::vector<Vector> row_list() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  Matrix transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& s : data_) {
      if (!s.is_zero()) return false;
    }
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const Scalar& c) {
    for (auto& s : data_) s *= c;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& c, Matrix m) { return m *= c; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
    Matrix c(a.ring_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw Error("matrix-vector shape mismatch");
    Vector out(rows_, ring_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
      }
    }
    return out;
  }

  /// Row-major flattening.
  Vector flatten() const { return data_; }

  static Matrix unflatten(const Ring& ring, std::size_t rows, std::size_t cols, const Vector& v) {
    if (v.size() != rows * cols) throw Error("unflatten size mismatch");
    Matrix m(ring, rows, cols);
    m.data_ = v;
    return m;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix m(ring_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ",";
        s += (*this)(i, j).to_string();
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  }

  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Result of Gaussian elimination: reduced echelon form plus pivot columns.
struct Echelon {
  Matrix reduced;                  // zero rows removed
  std::vector<std::size_t> pivots; // pivot column of each row
};

/// Reduced row-echelon form with zero rows dropped.
inline Echelon row_echelon(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!a(i, c).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(sel, j), a(r, j));
    }
    Scalar inv = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {a.block(0, 0, r, cols), pivots};
}

enum class EchelonMode { row, column };

/// Canonical echelon form. Row mode: RREF with zero rows dropped (preserves the
/// row space). Column mode: the transpose construction (preserves the column
/// space, zero columns dropped).
inline Matrix canonical_form(const Matrix& m, EchelonMode mode = EchelonMode::row) {
  if (mode == EchelonMode::row) return row_echelon(m).reduced;
  return row_echelon(m.transpose()).reduced.transpose();
}

inline std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

/// Basis of {v : m v = 0} as columns of the returned cols x (cols - rank) matrix.
/// Free variable j contributes e_j minus the pivot entries of column j.
inline Matrix nullspace(const Matrix& m) {
  Echelon e = row_echelon(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vector v(n, m.ring().zero());
    v[j] = m.ring().one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, j);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(m.ring(), n, basis);
}

/// Particular solution x of a x = b (free variables zero), or nullopt if inconsistent.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error("solve: shape mismatch");
  const std::size_t n = a.cols(), k = b.cols();
  Matrix aug(a.ring(), a.rows(), n + k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  Echelon e = row_echelon(aug);
  Matrix x(a.ring(), n, k);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;
    for (std::size_t j = 0; j < k; ++j) x(e.pivots[r], j) = e.reduced(r, n + j);
  }
  return x;
}

inline std::optional<Vector> solve_vector(const Matrix& a, const Vector& b) {
  auto x = solve(a, Matrix::column(a.ring(), b));
  if (!x) return std::nullopt;
  return x->col(0);
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.ring(), m.rows()));
}

inline Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det = m.ring().one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = n;
    for (std::size_t i = c; i < n; ++i) {
      if (!a(i, c).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == n) return m.ring().zero();
    if (sel != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(sel, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Scalar f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

inline bool is_symmetric(const Matrix& m) { return m.rows() == m.cols() && m == m.transpose(); }

}  // namespace jgl
