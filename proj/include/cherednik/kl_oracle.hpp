#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cherednik/bridge.hpp"
#include "cherednik/canonical.hpp"
#include "cherednik/errors.hpp"

namespace cherednik {

/// Second construction of the d-matrix, through the type A Hecke algebra.
///
/// F(Lambda_s)_n is matched with a weight space of
/// wedge^{d_1} V (x) ... (x) wedge^{d_l} V, a quotient of V^{(x)N} (N = |tau|),
/// by sending M_lambda to the wedge of the columns of A_lambda, each column
/// read bottom to top.  On V^{(x)N} the
/// Hecke algebra H_N acts on the right by
///   M_a H_i = M_{a s_i}                       if a_i < a_{i+1},
///   M_a H_i = q^{-1} M_a                      if a_i = a_{i+1},
///   M_a H_i = M_{a s_i} - (q - q^{-1}) M_a    if a_i > a_{i+1},
/// and the bar involution is fixed by bar(M_a) = M_a for weakly increasing a
/// together with bar(x H) = bar(x) H-bar, H_i-bar = H_i^{-1} = H_i + q - q^{-1}.
/// The wedge quotient imposes x H_i = -q x inside each column block; its
/// kernel is bar-stable, so bar descends.  Expanding H_w^{-1} this way is the
/// R-polynomial recursion behind Kazhdan-Lusztig polynomials.
class HeckeWedgeOracle {
 public:
  HeckeWedgeOracle(std::vector<int> s, int n, std::optional<int> shape_m = {}, bool invert_q = true)
      : s_(std::move(s)), n_(n), m_(shape_m.value_or(minimal_shape_m(s_, n))), invert_q_(invert_q),
        shape_(TauShape::from(s_, m_)) {
    int acc = 0;
    for (int d : shape_.heights) {
      block_start_.push_back(acc);
      acc += d;
    }
    block_start_.push_back(acc);
  }

  using Word = std::string;  // sequence a, one char per entry
  using TensorVector = std::unordered_map<Word, VPoly>;

  int shape_m() const { return m_; }

  Word encode(const std::vector<int>& a) const {
    Word w;
    for (int x : a) w.push_back(static_cast<char>(x + kOffset));
    return w;
  }

  /// bar(M_a) in V^{(x)N} for any sequence a.
  TensorVector bar_tensor(const Word& a) const {
    // descend a to its increasing rearrangement, recording the swaps
    Word cur = a;
    std::vector<std::size_t> path;
    bool moved = true;
    while (moved) {
      moved = false;
      for (std::size_t i = 0; i + 1 < cur.size(); ++i)
        if (cur[i] > cur[i + 1]) {
          std::swap(cur[i], cur[i + 1]);
          path.push_back(i);
          moved = true;
        }
    }
    // M_a = M_cur H_{p_k} ... H_{p_1}; apply the inverses in the same order
    TensorVector x{{cur, VPoly(1L)}};
    for (auto it = path.rbegin(); it != path.rend(); ++it) x = apply_hbar(x, *it);
    return x;
  }

  /// Image in the wedge quotient: blocks sorted strictly increasing.
  std::map<Word, VPoly> project(const TensorVector& x) const {
    std::map<Word, VPoly> out;
    for (const auto& [a, c] : x) {
      Word w = a;
      int swaps = 0;
      bool zero = false;
      for (std::size_t b = 0; b + 1 < block_start_.size() && !zero; ++b) {
        const auto lo = static_cast<std::size_t>(block_start_[b]);
        const auto hi = static_cast<std::size_t>(block_start_[b + 1]);
        for (bool again = true; again && !zero;) {
          again = false;
          for (std::size_t j = lo; j + 1 < hi; ++j) {
            if (w[j] == w[j + 1]) {
              zero = true;
              break;
            }
            if (w[j] > w[j + 1]) {
              std::swap(w[j], w[j + 1]);
              ++swaps;
              again = true;
            }
          }
        }
      }
      if (zero) continue;
      // each swap of a decreasing pair contributes -q
      VPoly f = VPoly::monomial(swaps, swaps % 2 ? Rational(-1) : Rational(1));
      VPoly& slot = out[w];
      slot += c * f;
      if (slot.is_zero()) out.erase(w);
    }
    return out;
  }

  /// Columns of A_lambda, each bottom to top.
  Word wedge_label(const Multipartition& lam) const {
    std::vector<int> a;
    for (const auto& col : tableau_of(lam, s_, m_).cols) a.insert(a.end(), col.rbegin(), col.rend());
    return encode(a);
  }

  /// d-matrix of P_l(n) computed in the wedge space, keyed by multipartitions.
  DMatrix d_matrix() const {
    DMatrix d;
    d.n = n_;
    d.s = s_;
    std::map<Word, Multipartition> label;
    for (const auto& block : residue_blocks(n_, s_)) {
      std::vector<Multipartition> order;
      std::map<Multipartition, FockVector> bar_of;
      for (const auto& lam : block) label[wedge_label(lam)] = lam;
      for (const auto& lam : block) {
        FockVector y;
        for (const auto& [w, c] : project(bar_tensor(wedge_label(lam)))) {
          auto it = label.find(w);
          if (it == label.end())
            throw InternalError("wedge bar involution leaves the span of the A_lambda at " + lam.to_string());
          y.emplace(it->second, invert_q_ ? c.bar() : c);
        }
        bar_of.emplace(lam, std::move(y));
      }
      order = support_order(block, bar_of);
      d.blocks.push_back(solve_block(
          order, [&](const Multipartition& lam) -> const FockVector& { return bar_of.at(lam); }, d.dual_canonical));
    }
    return d;
  }

 private:
  static constexpr int kOffset = 64;

  TensorVector apply_hbar(const TensorVector& x, std::size_t i) const {
    const VPoly gap = VPoly::monomial(1) - VPoly::monomial(-1);
    TensorVector y;
    auto put = [&y](const Word& w, const VPoly& c) {
      VPoly& slot = y[w];
      slot += c;
      if (slot.is_zero()) y.erase(w);
    };
    for (const auto& [a, c] : x) {
      // H_i-bar = H_i + (q - q^{-1})
      put(a, c * gap);
      if (a[i] < a[i + 1]) {
        Word b = a;
        std::swap(b[i], b[i + 1]);
        put(b, c);
      } else if (a[i] == a[i + 1]) {
        put(a, c * VPoly::monomial(-1));
      } else {
        Word b = a;
        std::swap(b[i], b[i + 1]);
        put(b, c);
        put(a, -(c * gap));
      }
    }
    return y;
  }

  /// Linear extension of "mu occurs in bar(M_lambda)".
  static std::vector<Multipartition> support_order(const std::vector<Multipartition>& block,
                                                   const std::map<Multipartition, FockVector>& bar_of) {
    std::vector<Multipartition> order;
    std::map<Multipartition, int> state;  // 1 visiting, 2 done
    std::function<void(const Multipartition&)> visit = [&](const Multipartition& lam) {
      int& st = state[lam];
      if (st == 2) return;
      if (st == 1) throw InternalError("wedge bar involution is not triangular");
      st = 1;
      for (const auto& [mu, c] : bar_of.at(lam))
        if (mu != lam) visit(mu);
      state[lam] = 2;
      order.push_back(lam);
    };
    for (const auto& lam : block) visit(lam);
    return order;
  }

  std::vector<int> s_;
  int n_;
  int m_;
  bool invert_q_;
  TauShape shape_;
  std::vector<int> block_start_;
};

}  // namespace cherednik
