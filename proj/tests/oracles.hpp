#pragma once

// Independent reference computations used only by tests.  Each one avoids
// the library routine it checks: brute-force enumeration, recursion on
// corners, direct string rewriting.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cherednik/bridge.hpp"
#include "cherednik/partition.hpp"

namespace oracle {

using cherednik::Multipartition;
using cherednik::Partition;

/// Coefficient of q^n in prod_i (1 - q^i)^{-l}, by repeated series multiplication.
inline long long multipartition_count(int n, int l) {
  std::vector<long long> series(static_cast<std::size_t>(n) + 1, 0);
  series[0] = 1;
  for (int c = 0; c < l; ++c)
    for (int part = 1; part <= n; ++part)
      for (int k = part; k <= n; ++k) series[static_cast<std::size_t>(k)] += series[static_cast<std::size_t>(k - part)];
  return series[static_cast<std::size_t>(n)];
}

/// Number of standard Young tableaux, by removing the largest entry at each corner.
inline long long syt_count(const std::vector<int>& shape) {
  static std::map<std::vector<int>, long long> memo;
  if (shape.empty()) return 1;
  if (auto it = memo.find(shape); it != memo.end()) return it->second;
  long long total = 0;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    const bool corner = r + 1 == shape.size() || shape[r + 1] < shape[r];
    if (!corner) continue;
    std::vector<int> smaller = shape;
    if (--smaller[r] == 0) smaller.pop_back();
    total += syt_count(smaller);
  }
  return memo[shape] = total;
}

inline long long binomial(int n, int k) {
  long long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

/// dim of the G_l(n) irreducible: choose positions for each component, then SYT.
inline long long irrep_dim(const Multipartition& lam) {
  long long d = 1;
  int left = lam.size();
  for (const auto& p : lam.components()) {
    d *= binomial(left, p.size()) * syt_count(p.parts());
    left -= p.size();
  }
  return d;
}

/// Residues s_m + b - a listed box by box.
inline std::multiset<int> residues(const Multipartition& lam, const std::vector<int>& s) {
  std::multiset<int> out;
  for (int m = 1; m <= lam.level(); ++m)
    for (int a = 1; a <= lam[m].length(); ++a)
      for (int b = 1; b <= lam[m].row(a); ++b) out.insert(s[static_cast<std::size_t>(m - 1)] + b - a);
  return out;
}

/// Transpose by counting boxes per column.
inline Partition transpose(const Partition& p) {
  std::vector<int> cols;
  for (int b = 1; b <= p.row(1); ++b) {
    int h = 0;
    for (int a = 1; a <= p.length(); ++a)
      if (p.row(a) >= b) ++h;
    cols.push_back(h);
  }
  return Partition(cols);
}

/// Reduced signature by rewriting "-+" to "" until stable.
inline std::string reduce_signature(std::string sig) {
  for (std::size_t k; (k = sig.find("-+")) != std::string::npos;) sig.erase(k, 2);
  return sig;
}

/// Minimal-length permutation w (images) with w(m) dominant, over all of S_l.
inline std::pair<std::vector<int>, std::vector<int>> dominant_reduce(const std::vector<int>& m) {
  const std::size_t l = m.size();
  std::vector<int> w(l);
  std::iota(w.begin(), w.end(), 0);
  std::pair<std::vector<int>, std::vector<int>> best;
  int best_len = -1;
  do {
    std::vector<int> wm(l);
    for (std::size_t i = 0; i < l; ++i) wm[static_cast<std::size_t>(w[i])] = m[i];
    bool dominant = l <= 1 || wm[l - 1] >= wm[0];
    for (std::size_t i = 0; i + 2 < l; ++i) dominant = dominant && wm[i] >= wm[i + 1];
    if (!dominant) continue;
    int len = 0;
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = i + 1; j < l; ++j) len += w[i] > w[j];
    if (best_len < 0 || len < best_len) {
      best_len = len;
      best = {w, wm};
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return best;
}

/// All column-strict fillings A of the shape with A - A_0 >= 0 summing to n,
/// by distributing n units over the cells.
inline std::set<std::vector<std::vector<int>>> column_strict_above_ground(const cherednik::TauShape& shape,
                                                                          const std::vector<int>& s, int n) {
  const auto A0 = cherednik::ground_state(shape, s);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t j = 0; j < A0.cols.size(); ++j)
    for (std::size_t r = 0; r < A0.cols[j].size(); ++r) cells.emplace_back(j, r);
  std::set<std::vector<std::vector<int>>> out;
  auto cols = A0.cols;
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k == cells.size()) {
      if (left != 0) return;
      for (const auto& c : cols)
        for (std::size_t r = 1; r < c.size(); ++r)
          if (c[r - 1] <= c[r]) return;
      out.insert(cols);
      return;
    }
    const auto [j, r] = cells[k];
    for (int x = 0; x <= left; ++x) {
      cols[j][r] = A0.cols[j][r] + x;
      rec(k + 1, left - x);
    }
    cols[j][r] = A0.cols[j][r];
  };
  rec(0, n);
  return out;
}

}  // namespace oracle
