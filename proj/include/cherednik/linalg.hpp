#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cherednik/laurent.hpp"

namespace cherednik {

using RatMatrix = std::vector<std::vector<Rational>>;

/// Row echelon reduction in place; returns pivot columns.
inline std::vector<std::size_t> row_reduce(RatMatrix& a, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational inv = 1 / a[row][col];
    for (std::size_t j = col; j < ncols; ++j) a[row][j] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = col; j < ncols; ++j) a[r][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(RatMatrix a, std::size_t ncols) { return row_reduce(a, ncols).size(); }

/// Basis of {x : a x = 0}.
inline std::vector<std::vector<Rational>> kernel_basis(RatMatrix a, std::size_t ncols) {
  auto piv = row_reduce(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(ncols, Rational(0));
    x[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -a[r][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

inline Rational determinant(RatMatrix a) {
  const std::size_t n = a.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

/// Rank over Q(v) of a matrix of Laurent polynomials, by fraction-free
/// elimination over Q[v].
inline std::size_t rank_over_function_field(std::vector<std::vector<VPoly>> a, std::size_t ncols) {
  for (auto& row : a) {
    int lo = 0;
    bool any = false;
    for (const auto& x : row)
      if (!x.is_zero()) {
        lo = any ? std::min(lo, x.min_degree()) : x.min_degree();
        any = true;
      }
    if (any && lo != 0)
      for (auto& x : row) x = x.shifted(-lo);
  }
  std::size_t row = 0;
  VPoly prev(1L);
  for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    for (std::size_t r = row + 1; r < a.size(); ++r) {
      for (std::size_t j = col + 1; j < ncols; ++j)
        a[r][j] = divide_exact(a[row][col] * a[r][j] - a[r][col] * a[row][j], prev);
      a[r][col] = VPoly();
    }
    prev = a[row][col];
    ++row;
  }
  return row;
}

}  // namespace cherednik
