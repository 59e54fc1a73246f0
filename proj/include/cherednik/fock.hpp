#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cherednik/linalg.hpp"
#include "cherednik/partition.hpp"

namespace cherednik {

/// Finite combination sum c_lambda M_lambda with Laurent coefficients in v.
using FockVector = std::map<Multipartition, VPoly>;

inline void accumulate(FockVector& x, const Multipartition& lam, const VPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = x.emplace(lam, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

inline FockVector add(FockVector a, const FockVector& b, const VPoly& scale = VPoly(1L)) {
  for (const auto& [lam, c] : b) accumulate(a, lam, c * scale);
  return a;
}

inline FockVector basis_vector(const Multipartition& lam) { return FockVector{{lam, VPoly(1L)}}; }

/// Semilinear v -> v^{-1} on coefficients only.
inline FockVector conjugate_coefficients(const FockVector& x) {
  FockVector y;
  for (const auto& [lam, c] : x) y.emplace(lam, c.bar());
  return y;
}

inline std::string to_string(const FockVector& x) {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lam, c] : x) {
    os << (first ? "" : " + ") << '(' << c.to_string('v') << ")*M" << lam;
    first = false;
  }
  return os.str();
}

/// Level-l Fock space F(Lambda_s) with the U_v(gl_infinity) action
/// E_i M = sum_A v^{d_A} M_{lambda_A}, F_i M = sum_B v^{-d^B} M_{lambda^B},
/// K_i M = v^{d_i} M.
class FockSpace {
 public:
  FockSpace(int l, std::vector<int> s) : l_(l), s_(std::move(s)) {
    if (static_cast<int>(s_.size()) != l_) throw std::invalid_argument("charge length differs from level");
  }

  int level() const { return l_; }
  const std::vector<int>& charge() const { return s_; }

  /// Adds an offset to d^B for boxes outside the first component; only used
  /// to check that the relation verifier notices a broken action.
  void set_perturbation(int offset) { perturb_ = offset; }

  int d_i(const Multipartition& lam, int i) const {
    int d = 0;
    for (const auto& mb : addable_removable(lam, s_, i)) d += mb.kind == BoxKind::Addable ? 1 : -1;
    return d;
  }

  /// d_A: addable minus removable i-boxes strictly below the removable box A.
  int d_below(const Multipartition& lam, const Box& x) const {
    if (!lam.contains(x)) throw std::invalid_argument("d_A needs a box of lambda");
    int d = 0;
    for (const auto& mb : addable_removable(lam, s_, residue(x, s_)))
      if (above(x, mb.box)) d += mb.kind == BoxKind::Addable ? 1 : -1;
    return d;
  }

  /// d^B: addable minus removable i-boxes strictly above the addable box B.
  int d_above(const Multipartition& lam, const Box& x) const {
    if (lam.contains(x)) throw std::invalid_argument("d^B needs a box outside lambda");
    int d = 0;
    for (const auto& mb : addable_removable(lam, s_, residue(x, s_)))
      if (above(mb.box, x)) d += mb.kind == BoxKind::Addable ? 1 : -1;
    return d;
  }

  FockVector E(int i, const FockVector& x) const {
    FockVector y;
    for (const auto& [lam, c] : x) {
      auto boxes = addable_removable(lam, s_, i);
      int below = 0;  // running d_A from the bottom
      for (auto it = boxes.rbegin(); it != boxes.rend(); ++it) {
        if (it->kind == BoxKind::Removable) accumulate(y, lam.without(it->box), c.shifted(below));
        below += it->kind == BoxKind::Addable ? 1 : -1;
      }
    }
    return y;
  }

  FockVector F(int i, const FockVector& x) const {
    FockVector y;
    for (const auto& [lam, c] : x) {
      int above_count = 0;
      for (const auto& mb : addable_removable(lam, s_, i)) {
        if (mb.kind == BoxKind::Addable) {
          int d = above_count + (mb.box.m > 1 ? perturb_ : 0);
          accumulate(y, lam.with(mb.box), c.shifted(-d));
        }
        above_count += mb.kind == BoxKind::Addable ? 1 : -1;
      }
    }
    return y;
  }

  /// K_i^{power}.
  FockVector K(int i, const FockVector& x, int power = 1) const {
    FockVector y;
    for (const auto& [lam, c] : x) accumulate(y, lam, c.shifted(power * d_i(lam, i)));
    return y;
  }

  /// Residues that can carry an addable or removable box in degrees <= n.
  std::vector<int> residue_window(int n) const {
    const auto [lo, hi] = std::minmax_element(s_.begin(), s_.end());
    std::vector<int> w;
    for (int i = *lo - n - 1; i <= *hi + n + 1; ++i) w.push_back(i);
    return w;
  }

 private:
  int l_;
  std::vector<int> s_;
  int perturb_ = 0;
};

/// Weight data of lambda: its residue multiset (the weight is Lambda_s minus
/// the corresponding sum of simple roots).
inline std::vector<int> weight_key(const Multipartition& lam, const std::vector<int>& s) {
  return residue_multiset(lam, s);
}

struct RelationReport {
  bool ok = true;
  std::size_t checks = 0;
  std::string first_violation;
};

namespace detail {
inline FockVector scale(const FockVector& x, const VPoly& c) {
  FockVector y;
  for (const auto& [lam, a] : x) accumulate(y, lam, a * c);
  return y;
}
}  // namespace detail

/// Checks the defining relations of U_v(gl_infinity) on all M_lambda with
/// |lambda| <= n and residues i, j in the given window.
inline RelationReport verify_relations(const FockSpace& fs, int n, const std::vector<int>& window) {
  RelationReport rep;
  const VPoly vv = VPoly::monomial(1) - VPoly::monomial(-1);
  const VPoly two = VPoly::monomial(1) + VPoly::monomial(-1);
  auto fail = [&](const std::string& what, const Multipartition& lam, int i, int j) {
    if (rep.ok) {
      std::ostringstream os;
      os << what << " fails at i=" << i << " j=" << j << " on M" << lam;
      rep.first_violation = os.str();
    }
    rep.ok = false;
  };
  for (int k = 0; k <= n; ++k)
    for (const auto& lam : enumerate_multipartitions(k, fs.level())) {
      const FockVector m = basis_vector(lam);
      for (int i : window)
        for (int j : window) {
          // [E_i, F_j] = delta_ij (K_i - K_i^{-1}) / (v - v^{-1})
          {
            FockVector lhs = add(fs.E(i, fs.F(j, m)), fs.F(j, fs.E(i, m)), VPoly(-1L));
            lhs = detail::scale(lhs, vv);
            FockVector rhs;
            if (i == j) rhs = add(fs.K(i, m), fs.K(i, m, -1), VPoly(-1L));
            ++rep.checks;
            if (lhs != rhs) fail("[E_i,F_j] relation", lam, i, j);
          }
          const int a = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
          // K_i E_j K_i^{-1} = v^{a_ij} E_j and K_i F_j K_i^{-1} = v^{-a_ij} F_j
          {
            ++rep.checks;
            if (fs.K(i, fs.E(j, fs.K(i, m, -1))) != detail::scale(fs.E(j, m), VPoly::monomial(a)))
              fail("K-conjugation of E", lam, i, j);
            ++rep.checks;
            if (fs.K(i, fs.F(j, fs.K(i, m, -1))) != detail::scale(fs.F(j, m), VPoly::monomial(-a)))
              fail("K-conjugation of F", lam, i, j);
          }
          if (std::abs(i - j) > 1) {
            ++rep.checks;
            if (fs.E(i, fs.E(j, m)) != fs.E(j, fs.E(i, m))) fail("E locality", lam, i, j);
            ++rep.checks;
            if (fs.F(i, fs.F(j, m)) != fs.F(j, fs.F(i, m))) fail("F locality", lam, i, j);
          }
          if (std::abs(i - j) == 1) {
            // X_i^2 X_j - [2] X_i X_j X_i + X_j X_i^2 = 0
            FockVector se = add(fs.E(i, fs.E(i, fs.E(j, m))), fs.E(j, fs.E(i, fs.E(i, m))));
            se = add(se, fs.E(i, fs.E(j, fs.E(i, m))), -two);
            ++rep.checks;
            if (!se.empty()) fail("Serre relation for E", lam, i, j);
            FockVector sf = add(fs.F(i, fs.F(i, fs.F(j, m))), fs.F(j, fs.F(i, fs.F(i, m))));
            sf = add(sf, fs.F(i, fs.F(j, fs.F(i, m))), -two);
            ++rep.checks;
            if (!sf.empty()) fail("Serre relation for F", lam, i, j);
          }
        }
    }
  return rep;
}

/// Matrix of E_i from degree n to degree n-1 as sparse triplets.
struct SparseEntry {
  Multipartition row, col;
  VPoly value;
};

inline std::vector<SparseEntry> operator_triplets(const FockSpace& fs, char op, int i, int n) {
  std::vector<SparseEntry> out;
  for (const auto& lam : enumerate_multipartitions(n, fs.level())) {
    FockVector m = basis_vector(lam);
    FockVector y = op == 'E' ? fs.E(i, m) : op == 'F' ? fs.F(i, m) : fs.K(i, m);
    for (const auto& [mu, c] : y) out.push_back({mu, lam, c});
  }
  return out;
}

/// dim over Q(v) of the common kernel of all E_i on F(Lambda_s)_n, computed
/// weight space by weight space.
inline std::size_t singular_space_dim(const FockSpace& fs, int n, long long cap = kDefaultEnumerationCap) {
  if (n == 0) return 1;
  const auto basis = enumerate_multipartitions(n, fs.level(), cap);
  std::map<std::vector<int>, std::vector<Multipartition>> blocks;
  for (const auto& lam : basis) blocks[weight_key(lam, fs.charge())].push_back(lam);
  std::size_t dim = 0;
  for (const auto& [key, block] : blocks) {
    std::set<int> residues(key.begin(), key.end());
    std::vector<std::vector<VPoly>> rows;
    for (int i : residues) {
      std::map<Multipartition, std::vector<VPoly>> image_rows;
      for (std::size_t c = 0; c < block.size(); ++c)
        for (const auto& [mu, coef] : fs.E(i, basis_vector(block[c]))) {
          auto& row = image_rows[mu];
          if (row.empty()) row.assign(block.size(), VPoly());
          row[c] = coef;
        }
      for (auto& [mu, row] : image_rows) rows.push_back(std::move(row));
    }
    dim += block.size() - rank_over_function_field(rows, block.size());
  }
  return dim;
}

}  // namespace cherednik
