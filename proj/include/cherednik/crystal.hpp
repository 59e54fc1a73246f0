#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cherednik/errors.hpp"
#include "cherednik/params.hpp"
#include "cherednik/partition.hpp"

namespace cherednik {

/// Addable (+) and removable (-) i-boxes ordered top to bottom.
using Signature = std::vector<MarkedBox>;

inline Signature signature(const Multipartition& lam, const std::vector<int>& s, int i) {
  return addable_removable(lam, s, i);
}

/// Cancels adjacent (-, +) pairs until no - precedes a +.
inline Signature reduced_signature(const Multipartition& lam, const std::vector<int>& s, int i) {
  Signature stack;
  for (const auto& mb : signature(lam, s, i)) {
    if (mb.kind == BoxKind::Addable && !stack.empty() && stack.back().kind == BoxKind::Removable)
      stack.pop_back();
    else
      stack.push_back(mb);
  }
  return stack;
}

inline std::string signature_string(const Signature& sig) {
  std::string out;
  for (const auto& mb : sig) out += mb.kind == BoxKind::Addable ? '+' : '-';
  return out;
}

struct CrystalStep {
  int eps = 0;
  int phi = 0;
  std::optional<Multipartition> e;  // e~_i lambda
  std::optional<Multipartition> f;  // f~_i lambda
};

inline CrystalStep crystal(const Multipartition& lam, const std::vector<int>& s, int i) {
  const Signature red = reduced_signature(lam, s, i);
  CrystalStep st;
  const MarkedBox* last_plus = nullptr;
  const MarkedBox* first_minus = nullptr;
  for (const auto& mb : red) {
    if (mb.kind == BoxKind::Addable) {
      ++st.phi;
      last_plus = &mb;
    } else {
      ++st.eps;
      if (!first_minus) first_minus = &mb;
    }
  }
  if (first_minus) st.e = lam.without(first_minus->box);
  if (last_plus) st.f = lam.with(last_plus->box);
  return st;
}

/// Residues carrying a removable box; only these can have eps_i > 0.
inline std::set<int> removable_residues(const Multipartition& lam, const std::vector<int>& s) {
  std::set<int> out;
  for (const auto& mb : addable_removable(lam, s))
    if (mb.kind == BoxKind::Removable) out.insert(residue(mb.box, s));
  return out;
}

/// True iff e~_i lambda = 0 for every i.
inline bool is_singular(const Multipartition& lam, const std::vector<int>& s) {
  for (int i : removable_residues(lam, s))
    if (crystal(lam, s, i).eps > 0) return false;
  return true;
}

/// The suffix form: in every i-signature each suffix has at least as many +
/// as -.  Equivalent to is_singular; kept as a cross-check.
inline bool is_singular_by_suffix(const Multipartition& lam, const std::vector<int>& s) {
  std::set<int> window;
  for (const auto& mb : addable_removable(lam, s)) window.insert(residue(mb.box, s));
  for (int i : window) {
    const Signature sig = signature(lam, s, i);
    int balance = 0;
    for (auto it = sig.rbegin(); it != sig.rend(); ++it) {
      balance += it->kind == BoxKind::Addable ? 1 : -1;
      if (balance < 0) return false;
    }
  }
  return true;
}

/// Memoized N(lambda): the longest nonzero chain of e~ operators from lambda.
class CrystalDepth {
 public:
  explicit CrystalDepth(std::vector<int> s) : s_(std::move(s)) {}

  int operator()(const Multipartition& lam) {
    if (auto it = memo_.find(lam); it != memo_.end()) return it->second;
    int best = 0;
    for (int i : removable_residues(lam, s_)) {
      auto st = crystal(lam, s_, i);
      if (st.e) best = std::max(best, 1 + (*this)(*st.e));
    }
    memo_.emplace(lam, best);
    return best;
  }

 private:
  std::vector<int> s_;
  std::map<Multipartition, int> memo_;
};

/// X^n_m = G_n . {(0, ..., 0, x_1, ..., x_m)}.
struct SupportLabel {
  int n = 0;
  int m = 0;
  std::string to_string() const { return "X^" + std::to_string(n) + "_" + std::to_string(m); }
};

namespace detail {
/// kappa irrational, s strictly decreasing integers, m with m_l >= m_1 >= ... >= m_{l-1}.
inline std::vector<int> require_support_hypotheses(const ParamKS& p) {
  p.validate();
  if (!p.symbolic())
    throw PreconditionError("kappa must be symbolic: the support and finite-dimensionality criteria need kappa not rational");
  const std::vector<int> s = p.integer_charge();
  for (std::size_t j = 1; j < s.size(); ++j)
    if (!(s[j - 1] > s[j])) throw PreconditionError("s not strictly decreasing: need s_1 > ... > s_l");
  if (p.m && !is_dominant(*p.m)) throw PreconditionError("m not dominant: need m_l >= m_1 >= ... >= m_{l-1}");
  return s;
}
}  // namespace detail

/// Support of L(lambda*) for the parameter (kappa, (s*, m)).
inline SupportLabel support_of(const Multipartition& lam, const ParamKS& p) {
  const auto s = detail::require_support_hypotheses(p);
  if (lam.level() != p.l) throw PreconditionError("multipartition level differs from l");
  CrystalDepth depth(s);
  return {lam.size(), depth(lam)};
}

/// Labels lambda* of the finite-dimensional irreducibles at (kappa, (s*, m)).
inline std::vector<Multipartition> finite_dim_labels(int n, const ParamKS& p,
                                                     long long cap = kDefaultEnumerationCap) {
  const auto s = detail::require_support_hypotheses(p);
  std::vector<Multipartition> out;
  for (const auto& lam : enumerate_multipartitions(n, p.l, cap))
    if (is_singular(lam, s)) out.push_back(star(lam));
  return out;
}

inline std::vector<Multipartition> singular_vertices(int n, const std::vector<int>& s,
                                                     long long cap = kDefaultEnumerationCap) {
  std::vector<Multipartition> out;
  for (const auto& lam : enumerate_multipartitions(n, static_cast<int>(s.size()), cap))
    if (is_singular(lam, s)) out.push_back(lam);
  return out;
}

struct CrystalEdge {
  Multipartition from, to;
  int i;
};

/// The f~-edges among multipartitions of size < n (targets of size <= n).
struct CrystalGraph {
  std::vector<Multipartition> nodes;
  std::vector<CrystalEdge> edges;
};

inline CrystalGraph crystal_graph(int n, const std::vector<int>& s, long long cap = kDefaultEnumerationCap) {
  CrystalGraph g;
  const int l = static_cast<int>(s.size());
  for (int k = 0; k <= n; ++k)
    for (const auto& lam : enumerate_multipartitions(k, l, cap)) {
      g.nodes.push_back(lam);
      if (k == n) continue;
      std::set<int> window;
      for (const auto& mb : addable_removable(lam, s))
        if (mb.kind == BoxKind::Addable) window.insert(residue(mb.box, s));
      for (int i : window)
        if (auto st = crystal(lam, s, i); st.f) g.edges.push_back({lam, *st.f, i});
    }
  return g;
}

}  // namespace cherednik
