#include "confdesign/algebra/matrix.hpp"

namespace confdesign {

namespace {

bool nonzero(const Rat& x) { return x != 0; }
bool nonzero(const RatFunc& x) { return !x.is_zero(); }

// Rough cost used to prefer simple pivots in symbolic elimination.
std::size_t weight(const Rat&) { return 0; }
std::size_t weight(const RatFunc& x) { return x.num().size() + x.den().size(); }

// In-place reduced row echelon form; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t best = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i)
      if (nonzero(m(i, col)) && (best == m.rows() || weight(m(i, col)) < weight(m(best, col)))) best = i;
    if (best == m.rows()) continue;
    if (best != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(r, j));
    const T inv = T(1L) / m(r, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || !nonzero(m(i, col))) continue;
      const T f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (nonzero(m(r, j))) m(i, j) = m(i, j) - f * m(r, j);
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

template <class T>
std::vector<std::vector<T>> kernel_impl(const Matrix<T>& a) {
  Matrix<T> m = a;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(a.cols(), T(0L));
    v[free] = T(1L);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
SolveResult<T> solve_impl(const Matrix<T>& a, const std::vector<T>& b) {
  if (!a.is_square()) throw std::domain_error("solve_linear needs a square matrix");
  if (b.size() != a.rows()) throw std::domain_error("right-hand side length does not match matrix");
  const std::size_t n = a.rows();
  Matrix<T> aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = rref(aug);
  SolveResult<T> res;
  if (pivots.size() < n || pivots.back() >= n) {
    res.singular = true;
    res.kernel = kernel_impl(a);
    return res;
  }
  res.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) res.x[i] = aug(i, n);
  return res;
}

}  // namespace

MPoly det(const PMatrix& a0) {
  if (!a0.is_square()) throw std::domain_error("determinant of a non-square matrix");
  PMatrix a = a0;
  const std::size_t n = a.rows();
  if (n == 0) return MPoly(1);
  bool negate = false;
  MPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k).is_zero()) ++swap;
      if (swap == n) return MPoly{};
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = prev.is_constant() ? v * (Rat(1) / prev.constant_value()) : exact_div(v, prev);
      }
      a(i, k) = MPoly{};
    }
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

RatFunc det(const RMatrix& a) {
  if (!a.is_square()) throw std::domain_error("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  PMatrix p(n, n);
  MPoly scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    MPoly l(1);
    for (std::size_t j = 0; j < n; ++j) {
      const MPoly& d = a(i, j).den();
      if (d.is_constant()) continue;
      l = l * exact_div(d, gcd(l, d));
    }
    for (std::size_t j = 0; j < n; ++j) p(i, j) = a(i, j).num() * exact_div(l, a(i, j).den());
    scale *= l;
  }
  return RatFunc(det(p), scale);
}

Rat det(const QMatrix& a0) {
  if (!a0.is_square()) throw std::domain_error("determinant of a non-square matrix");
  QMatrix a = a0;
  const std::size_t n = a.rows();
  Rat d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      d = -d;
    }
    d *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rat f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return d;
}

std::vector<std::vector<Rat>> kernel(const QMatrix& a) { return kernel_impl(a); }
std::vector<std::vector<RatFunc>> kernel(const RMatrix& a) { return kernel_impl(a); }

std::vector<std::size_t> row_reduce(QMatrix& a) { return rref(a); }
std::vector<std::size_t> row_reduce(RMatrix& a) { return rref(a); }

std::size_t rank(const QMatrix& a) {
  QMatrix m = a;
  return rref(m).size();
}
std::size_t rank(const RMatrix& a) {
  RMatrix m = a;
  return rref(m).size();
}

SolveResult<Rat> solve_linear(const QMatrix& a, const std::vector<Rat>& b) { return solve_impl(a, b); }
SolveResult<RatFunc> solve_linear(const RMatrix& a, const std::vector<RatFunc>& b) { return solve_impl(a, b); }

}  // namespace confdesign
