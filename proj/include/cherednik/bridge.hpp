#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "cherednik/crystal.hpp"
#include "cherednik/errors.hpp"
#include "cherednik/params.hpp"
#include "cherednik/partition.hpp"

namespace cherednik {

/// Column heights d_j = m + s_j - s_1 of the shape tau.
struct TauShape {
  std::vector<int> heights;

  int total() const {
    int t = 0;
    for (int d : heights) t += d;
    return t;
  }
  int level() const { return static_cast<int>(heights.size()); }
  /// Global rows occupied by column j (1-indexed) are first_row(j)..d_1.
  int first_row(int j) const { return heights.front() - heights[static_cast<std::size_t>(j - 1)] + 1; }

  /// The partition tau with tau^t = (d_1, ..., d_l).
  Partition tau() const { return Partition(heights).transpose(); }

  static TauShape from(const std::vector<int>& s, int m) {
    require_strictly_decreasing_charge(s);
    TauShape sh;
    for (int sj : s) {
      const int d = m + sj - s.front();
      if (d < 1) throw PreconditionError("column height m + s_j - s_1 must be positive");
      sh.heights.push_back(d);
    }
    return sh;
  }

  static void require_strictly_decreasing_charge(const std::vector<int>& s) {
    if (s.empty()) throw PreconditionError("charge must be nonempty");
    for (std::size_t j = 1; j < s.size(); ++j)
      if (!(s[j - 1] > s[j])) throw PreconditionError("s not strictly decreasing: need s_1 > ... > s_l");
  }

  bool operator==(const TauShape&) const = default;
};

/// Smallest admissible m for degree n: m >= s_1 - s_l + n and every d_j >= 1.
inline int minimal_shape_m(const std::vector<int>& s, int n) { return s.front() - s.back() + std::max(n, 1); }

/// Filling of a TauShape; cols[j] lists column j+1 from top to bottom.
struct Tableau {
  TauShape shape;
  std::vector<std::vector<int>> cols;

  /// Entry at global row i of column j (1-indexed), if present.
  std::optional<int> at(int i, int j) const {
    const int first = shape.first_row(j);
    if (i < first || i > shape.heights.front()) return std::nullopt;
    return cols[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - first)];
  }

  /// Column-major reading, each column top to bottom.
  std::vector<int> reading() const {
    std::vector<int> a;
    for (const auto& c : cols) a.insert(a.end(), c.begin(), c.end());
    return a;
  }

  bool well_shaped() const {
    if (cols.size() != shape.heights.size()) return false;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (static_cast<int>(cols[j].size()) != shape.heights[j]) return false;
    return true;
  }

  bool operator==(const Tableau&) const = default;
  auto operator<=>(const Tableau& o) const { return cols <=> o.cols; }
};

/// Strictly increasing from bottom to top in every column.
inline bool is_column_strict(const Tableau& A) {
  for (const auto& c : A.cols)
    for (std::size_t r = 1; r < c.size(); ++r)
      if (!(c[r - 1] > c[r])) return false;
  return true;
}

/// A_0: entry s_1 + 1 - i in global row i.
inline Tableau ground_state(const TauShape& shape, const std::vector<int>& s) {
  Tableau A{shape, {}};
  for (int j = 1; j <= shape.level(); ++j) {
    std::vector<int> col;
    for (int i = shape.first_row(j); i <= shape.heights.front(); ++i) col.push_back(s.front() + 1 - i);
    A.cols.push_back(std::move(col));
  }
  return A;
}

/// A_lambda: entry lambda^{(j)}_{d_j - d_1 + i} + s_1 - i + 1 in global row i.
inline Tableau tableau_of(const Multipartition& lam, const std::vector<int>& s, int m) {
  const TauShape shape = TauShape::from(s, m);
  if (lam.level() != shape.level()) throw PreconditionError("multipartition level differs from the charge length");
  if (lam.size() > m - s.front() + s.back())
    throw PreconditionError("m too small: need m >= s_1 - s_l + n");
  Tableau A = ground_state(shape, s);
  for (int j = 1; j <= shape.level(); ++j) {
    auto& col = A.cols[static_cast<std::size_t>(j - 1)];
    for (std::size_t r = 0; r < col.size(); ++r) col[r] += lam[j].row(static_cast<int>(r) + 1);
  }
  return A;
}

/// Inverse of tableau_of; throws unless A = A_lambda for some lambda.
inline Multipartition lambda_of(const Tableau& A, const std::vector<int>& s) {
  if (!A.well_shaped()) throw PreconditionError("tableau does not match its shape");
  const Tableau A0 = ground_state(A.shape, s);
  std::vector<Partition> comps;
  for (std::size_t j = 0; j < A.cols.size(); ++j) {
    std::vector<int> parts;
    for (std::size_t r = 0; r < A.cols[j].size(); ++r) {
      const int x = A.cols[j][r] - A0.cols[j][r];
      if (x < 0) throw PreconditionError("tableau entry below the ground state");
      if (!parts.empty() && x > parts.back()) throw PreconditionError("differences do not form a partition");
      parts.push_back(x);
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    comps.emplace_back(parts);
  }
  return Multipartition(std::move(comps));
}

/// tau(A) = a - rho with rho = (0, -1, ..., 1 - |tau|).
inline std::vector<int> weight_tau(const Tableau& A) {
  if (!A.well_shaped()) throw PreconditionError("tableau does not match its shape");
  std::vector<int> a = A.reading();
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += static_cast<int>(k);
  return a;
}

/// Labels matched by the equivalence Upsilon_n of highest weight categories.
struct UpsilonLabels {
  Scalar kappa;
  std::vector<int> s_star;
  std::vector<Rational> m;
  Multipartition lambda_star;
  Tableau parabolic;
  /// i-restriction on the Cherednik side matches (-i)-restriction on the parabolic side.
  static int functor_index(int i) { return -i; }
};

inline UpsilonLabels upsilon_labels(const Multipartition& lam, const ParamKS& p, std::optional<int> shape_m = {}) {
  const auto s = detail::require_support_hypotheses(p);
  if (lam.level() != p.l) throw PreconditionError("multipartition level differs from l");
  const int m = shape_m.value_or(minimal_shape_m(s, lam.size()));
  UpsilonLabels u;
  u.kappa = p.kappa;
  u.s_star = star_params(s);
  u.m = p.m.value_or(std::vector<Rational>(static_cast<std::size_t>(p.l), Rational(0)));
  u.lambda_star = star(lam);
  u.parabolic = tableau_of(lam, s, m);
  return u;
}

}  // namespace cherednik
