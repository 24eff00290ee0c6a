#pragma once

// Small dense linear algebra for dimension <= ~8: rank, square solves and
// null-space bases. Exact for Rational, pivoted with tolerance for double.

#include "mixrep/scalar.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace mixrep {

template <Number T>
using Point = std::vector<T>;

template <Number T>
using Matrix = std::vector<std::vector<T>>;

template <Number T>
T dot(const Point<T>& a, const Point<T>& b) {
  if (a.size() != b.size()) throw invalid_input("dimension mismatch in dot product");
  T s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <Number T>
Point<T> add(const Point<T>& a, const Point<T>& b) {
  if (a.size() != b.size()) throw invalid_input("dimension mismatch in addition");
  Point<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <Number T>
Point<T> sub(const Point<T>& a, const Point<T>& b) {
  if (a.size() != b.size()) throw invalid_input("dimension mismatch in subtraction");
  Point<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <Number T>
Point<T> scale(const Point<T>& a, const T& s) {
  Point<T> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

template <Number T>
bool is_zero_vector(const Point<T>& a, double tol = kDefaultTol) {
  return std::all_of(a.begin(), a.end(), [&](const T& v) { return near_zero(v, tol); });
}

template <Number T>
Point<T> basis_vector(std::size_t dim, std::size_t axis) {
  Point<T> e(dim, T(0));
  e.at(axis) = T(1);
  return e;
}

namespace detail {

// Reduced row echelon form in place; returns pivot columns.
template <Number T>
std::vector<std::size_t> rref(Matrix<T>& m, std::size_t cols, double tol) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t best = row;
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if constexpr (NumTraits<T>::exact) {
        if (m[best][col] == 0 && m[r][col] != 0) best = r;
      } else {
        if (std::abs(m[r][col]) > std::abs(m[best][col])) best = r;
      }
    }
    if (near_zero(m[best][col], tol)) continue;
    std::swap(m[row], m[best]);
    const T piv = m[row][col];
    for (auto& v : m[row]) v /= piv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || near_zero(m[r][col], 0.0)) continue;
      const T f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <Number T>
std::size_t rank(Matrix<T> rows, std::size_t cols, double tol = kDefaultTol) {
  return detail::rref(rows, cols, tol).size();
}

/// Basis of {x : rows * x = 0}.
template <Number T>
std::vector<Point<T>> null_space(Matrix<T> rows, std::size_t cols, double tol = kDefaultTol) {
  const auto pivots = detail::rref(rows, cols, tol);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Point<T>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Point<T> v(cols, T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Unique solution of a square system, or nullopt when singular.
template <Number T>
std::optional<Point<T>> solve_square(const Matrix<T>& a, const Point<T>& b,
                                     double tol = kDefaultTol) {
  const std::size_t n = b.size();
  Matrix<T> aug = a;
  for (std::size_t r = 0; r < n; ++r) aug[r].push_back(b[r]);
  const auto pivots = detail::rref(aug, n, tol);
  if (pivots.size() != n) return std::nullopt;
  Point<T> x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = aug[r][n];
  return x;
}

/// Scale a rational vector to the primitive integer vector with the same
/// direction (positive multiple).
inline std::vector<BigInt> primitive_direction(const Point<Rational>& v) {
  BigInt l = 1;
  for (const auto& c : v) l = boost::multiprecision::lcm(l, denominator(c));
  std::vector<BigInt> ints;
  ints.reserve(v.size());
  BigInt g = 0;
  for (const auto& c : v) {
    BigInt k = numerator(c) * (l / denominator(c));
    g = boost::multiprecision::gcd(g, k);
    ints.push_back(std::move(k));
  }
  if (g == 0) throw invalid_input("zero vector has no direction");
  if (g < 0) g = -g;
  for (auto& k : ints) k /= g;
  return ints;
}

}  // namespace mixrep
