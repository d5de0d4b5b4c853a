#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <string>
#include <vector>

#include "confdesign/algebra/mpoly.hpp"
#include "confdesign/algebra/ratfunc.hpp"

namespace confdesign {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0L)) {}
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1L);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::domain_error("matrix product dimension mismatch");
    Matrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (is_zero_value(x(i, k))) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += x(i, k) * y(k, j);
      }
    return r;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  template <class F>
  auto map(F f) const -> Matrix<decltype(f(std::declval<T>()))> {
    Matrix<decltype(f(std::declval<T>()))> r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
    return r;
  }

  static bool is_zero_value(const T& x) {
    if constexpr (std::is_same_v<T, Rat>) return x == 0;
    else return x.is_zero();
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using QMatrix = Matrix<Rat>;
using PMatrix = Matrix<MPoly>;
using RMatrix = Matrix<RatFunc>;

/// Fraction-free (Bareiss) determinant.
MPoly det(const PMatrix& a);
/// Clears row denominators, runs Bareiss over polynomials and divides back.
RatFunc det(const RMatrix& a);
Rat det(const QMatrix& a);

template <class T>
struct SolveResult {
  bool singular = false;
  std::vector<T> x;                    // set when nonsingular
  std::vector<std::vector<T>> kernel;  // set when singular
};

/// Basis of the right kernel, one vector per free column of the reduced
/// row echelon form (free entry 1).
std::vector<std::vector<Rat>> kernel(const QMatrix& a);
std::vector<std::vector<RatFunc>> kernel(const RMatrix& a);

/// In-place reduced row echelon form (pivot entries 1); returns the pivot
/// columns in order.
std::vector<std::size_t> row_reduce(QMatrix& a);
std::vector<std::size_t> row_reduce(RMatrix& a);

std::size_t rank(const QMatrix& a);
std::size_t rank(const RMatrix& a);

/// Solves a square system; reports the kernel of A when it is singular.
SolveResult<Rat> solve_linear(const QMatrix& a, const std::vector<Rat>& b);
SolveResult<RatFunc> solve_linear(const RMatrix& a, const std::vector<RatFunc>& b);

/// Cofactor expansion, used as an independent check on small matrices.
template <class T>
T det_cofactor(const Matrix<T>& a) {
  if (!a.is_square()) throw std::domain_error("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return T(1L);
  if (n == 1) return a(0, 0);
  T sum(0L);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<T> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, kk = 0; k < n; ++k) {
        if (k == j) continue;
        minor(i - 1, kk++) = a(i, k);
      }
    T term = a(0, j) * det_cofactor(minor);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

}  // namespace confdesign
