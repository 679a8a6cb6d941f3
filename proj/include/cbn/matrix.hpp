#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cbn/error.hpp"
#include "cbn/lpoly.hpp"

namespace cbn {

// Dense row-major matrix over a commutative ring (LPoly or Int).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {
    if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  T const& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  T& at(std::size_t i, std::size_t j) {
    if (i >= r_ || j >= c_) throw DimensionMismatch("matrix index out of range");
    return (*this)(i, j);
  }
  T const& at(std::size_t i, std::size_t j) const {
    if (i >= r_ || j >= c_) throw DimensionMismatch("matrix index out of range");
    return (*this)(i, j);
  }

  bool operator==(Matrix const&) const = default;

  bool is_identity() const {
    if (r_ != c_) return false;
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        if (i == j ? !is_one((*this)(i, j)) : !is_zero((*this)(i, j))) return false;
    return true;
  }

  template <class F>
  auto map(F f) const {
    using U = decltype(f(std::declval<T const&>()));
    Matrix<U> m(r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

  friend Matrix operator*(Matrix const& x, Matrix const& y) {
    if (x.c_ != y.r_)
      throw DimensionMismatch("cannot multiply " + std::to_string(x.r_) + "x" + std::to_string(x.c_) + " by " +
                              std::to_string(y.r_) + "x" + std::to_string(y.c_));
    Matrix z(x.r_, y.c_);
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t k = 0; k < x.c_; ++k) {
        T const& xik = x(i, k);
        if (is_zero(xik)) continue;
        for (std::size_t j = 0; j < y.c_; ++j) {
          T const& ykj = y(k, j);
          if (is_zero(ykj)) continue;
          z(i, j) += xik * ykj;
        }
      }
    return z;
  }

  friend Matrix operator+(Matrix x, Matrix const& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) throw DimensionMismatch("matrix sum of different shapes");
    for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] += y.a_[k];
    return x;
  }

  friend Matrix operator-(Matrix x, Matrix const& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) throw DimensionMismatch("matrix difference of different shapes");
    for (std::size_t k = 0; k < x.a_.size(); ++k) x.a_[k] -= y.a_[k];
    return x;
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<T> a_;
};

using RMat = Matrix<LPoly>;
using ZMat = Matrix<Int>;

template <class T>
Matrix<T> mat_mul(Matrix<T> const& a, Matrix<T> const& b) {
  return a * b;
}

template <class T>
bool mat_eq(Matrix<T> const& a, Matrix<T> const& b) {
  return a == b;
}

template <class T>
Matrix<T> mat_identity(std::size_t n) {
  return Matrix<T>::identity(n);
}

template <class T>
Matrix<T> mat_scalar(T const& c, Matrix<T> m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) m(i, j) = c * m(i, j);
  return m;
}

template <class T>
Matrix<T> mat_power(Matrix<T> const& m, unsigned k) {
  Matrix<T> r = Matrix<T>::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) r = r * m;
  return r;
}

template <class T>
Matrix<T> block_diag(std::vector<Matrix<T>> const& blocks) {
  if (blocks.empty()) throw DimensionMismatch("block_diag of no blocks");
  std::size_t R = 0, C = 0;
  for (auto const& b : blocks) {
    R += b.rows();
    C += b.cols();
  }
  Matrix<T> m(R, C);
  std::size_t r0 = 0, c0 = 0;
  for (auto const& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

// m x m grid of l x l blocks; unassigned blocks are zero.
template <class T>
Matrix<T> block_monomial(std::vector<std::tuple<std::size_t, std::size_t, Matrix<T>>> const& assignments, std::size_t l,
                         std::size_t m) {
  Matrix<T> out(l * m, l * m);
  for (auto const& [bi, bj, b] : assignments) {
    if (bi >= m || bj >= m) throw DimensionMismatch("block position out of range");
    if (b.rows() != l || b.cols() != l) throw DimensionMismatch("block has wrong size");
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) out(bi * l + i, bj * l + j) = b(i, j);
  }
  return out;
}

// permutation matrix sending basis row k to column seq[k] (0-based)
template <class T>
Matrix<T> permutation_matrix(std::vector<std::size_t> const& seq) {
  Matrix<T> m(seq.size(), seq.size());
  for (std::size_t k = 0; k < seq.size(); ++k) m(k, seq.at(k)) = T(1);
  return m;
}

template <class T>
Matrix<T> submatrix(Matrix<T> const& a, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
  if (r0 + rows > a.rows() || c0 + cols > a.cols()) throw DimensionMismatch("submatrix out of range");
  Matrix<T> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = a(r0 + i, c0 + j);
  return m;
}

// Fraction-free Gaussian elimination.
inline Int determinant(ZMat a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  std::size_t n = a.rows();
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// 0/1 matrix with exactly one 1 in each row and column
template <class T>
bool is_permutation_matrix(Matrix<T> const& m) {
  if (m.rows() != m.cols()) return false;
  std::vector<int> colcount(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int ones = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (is_zero(m(i, j))) continue;
      if (!is_one(m(i, j))) return false;
      ++ones;
      ++colcount[j];
    }
    if (ones != 1) return false;
  }
  for (int c : colcount)
    if (c != 1) return false;
  return true;
}

inline RMat specialize(RMat const& m, std::optional<Rational> const& t, std::optional<Rational> const& q) {
  return m.map([&](LPoly const& p) { return p.specialize(t, q); });
}

}  // namespace cbn
