// liegeo: invariant Riemannian geometry on Lie groups given by structure constants.
//
// Minimal dense matrix over an arbitrary scalar type. The geometry kernels
// are templated over the scalar (double or exact rational), so they cannot
// use a double-only linear-algebra library; dimensions here are tiny (the
// algebra dimension), so naive O(n^3) kernels are entirely adequate.
// Double-specific spectral work (eigenvalue solves) lives elsewhere and uses
// Eigen.

#pragma once

#include "liegeo/scalar.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liegeo {

template <typename S>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("liegeo: negative matrix shape");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), S(0));
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  static Matrix diagonal(const std::vector<S>& d) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int i, int j) { return data_[index(i, j)]; }
  const S& operator()(int i, int j) const { return data_[index(i, j)]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix& operator+=(const Matrix& rhs) {
    require_same_shape(rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& rhs) {
    require_same_shape(rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= S(-1); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("liegeo: matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (aik == S(0)) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  bool operator==(const Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
  }

  /// Matrix-vector product.
  std::vector<S> apply(const std::vector<S>& x) const {
    if (static_cast<int>(x.size()) != cols_) {
      throw std::invalid_argument("liegeo: matrix-vector shape mismatch");
    }
    std::vector<S> y(static_cast<std::size_t>(rows_), S(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) y[static_cast<std::size_t>(i)] += (*this)(i, j) * x[static_cast<std::size_t>(j)];
    return y;
  }

  /// Determinant by Gaussian elimination with partial pivoting (exact for
  /// rational scalars, numerically standard for double).
  S determinant() const {
    require_square();
    Matrix a(*this);
    const int n = rows_;
    S det(1);
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      S best(0);
      for (int r = col; r < n; ++r) {
        S mag = scalar_traits<S>::abs(a(r, col));
        if (pivot < 0 || best < mag) {
          pivot = r;
          best = mag;
        }
      }
      if (best == S(0)) return S(0);
      if (pivot != col) {
        a.swap_rows(pivot, col);
        det = -det;
      }
      det *= a(col, col);
      for (int r = col + 1; r < n; ++r) {
        if (a(r, col) == S(0)) continue;
        S f = a(r, col) / a(col, col);
        for (int c = col; c < n; ++c) a(r, c) -= f * a(col, c);
      }
    }
    return det;
  }

  /// Inverse by Gauss-Jordan with partial pivoting; throws on singular input.
  Matrix inverse() const {
    require_square();
    const int n = rows_;
    Matrix a(*this);
    Matrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      S best(0);
      for (int r = col; r < n; ++r) {
        S mag = scalar_traits<S>::abs(a(r, col));
        if (pivot < 0 || best < mag) {
          pivot = r;
          best = mag;
        }
      }
      if (best == S(0)) throw std::invalid_argument("liegeo: matrix is singular");
      if (pivot != col) {
        a.swap_rows(pivot, col);
        inv.swap_rows(pivot, col);
      }
      const S d = a(col, col);
      for (int c = 0; c < n; ++c) {
        a(col, c) /= d;
        inv(col, c) /= d;
      }
      for (int r = 0; r < n; ++r) {
        if (r == col || a(r, col) == S(0)) continue;
        const S f = a(r, col);
        for (int c = 0; c < n; ++c) {
          a(r, c) -= f * a(col, c);
          inv(r, c) -= f * inv(col, c);
        }
      }
    }
    return inv;
  }

  /// Lower-triangular Cholesky factor L with (*this) == L * L^T. Requires a
  /// symmetric positive-definite matrix; for exact scalars the square roots
  /// must exist exactly (otherwise scalar_traits<S>::sqrt throws).
  Matrix cholesky() const {
    require_square();
    const int n = rows_;
    Matrix L(n, n);
    for (int j = 0; j < n; ++j) {
      S diag = (*this)(j, j);
      for (int k = 0; k < j; ++k) diag -= L(j, k) * L(j, k);
      if (!(S(0) < diag)) {
        throw std::invalid_argument("liegeo: Cholesky pivot is not positive (matrix not positive definite)");
      }
      L(j, j) = scalar_traits<S>::sqrt(diag);
      for (int i = j + 1; i < n; ++i) {
        S v = (*this)(i, j);
        for (int k = 0; k < j; ++k) v -= L(i, k) * L(j, k);
        L(i, j) = v / L(j, j);
      }
    }
    return L;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) {
      const double a = std::fabs(scalar_traits<S>::to_double(v));
      if (a > m) m = a;
    }
    return m;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
      os << (i == 0 ? "[" : " ");
      for (int j = 0; j < cols_; ++j) {
        if (j > 0) os << ", ";
        os << scalar_traits<S>::to_string((*this)(i, j));
      }
      os << (i + 1 == rows_ ? "]" : ";\n");
    }
    return os.str();
  }

 private:
  std::size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
      throw std::out_of_range("liegeo: matrix index out of range");
    }
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  void swap_rows(int r1, int r2) {
    for (int c = 0; c < cols_; ++c) std::swap((*this)(r1, c), (*this)(r2, c));
  }

  void require_square() const {
    if (rows_ != cols_) throw std::invalid_argument("liegeo: operation requires a square matrix");
  }
  void require_same_shape(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
      throw std::invalid_argument("liegeo: matrix shape mismatch");
    }
  }

  int rows_;
  int cols_;
  std::vector<S> data_;
};

/// (M + M^T)/2. Requires a scalar with exact halves (rational or floating).
template <typename S>
Matrix<S> symmetric_part(const Matrix<S>& m) {
  Matrix<S> out(m.rows(), m.cols());
  const S half = scalar_traits<S>::from_fraction(1, 2);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = half * (m(i, j) + m(j, i));
  return out;
}

/// (M - M^T)/2.
template <typename S>
Matrix<S> skew_part(const Matrix<S>& m) {
  Matrix<S> out(m.rows(), m.cols());
  const S half = scalar_traits<S>::from_fraction(1, 2);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = half * (m(i, j) - m(j, i));
  return out;
}

}  // namespace liegeo
