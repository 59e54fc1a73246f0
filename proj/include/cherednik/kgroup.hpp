#pragma once

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cherednik/characters.hpp"
#include "cherednik/linalg.hpp"
#include "cherednik/params.hpp"
#include "cherednik/partition.hpp"

namespace cherednik {

/// Finite combination of classes [Delta(lambda)].
using KVector = std::map<Multipartition, Rational>;

/// Matrix in the canonical bases: entries[row][col].
struct KMatrix {
  std::vector<Multipartition> rows, cols;
  RatMatrix entries;

  KVector apply(const KVector& x) const {
    auto idx = index_of(cols);
    KVector y;
    for (const auto& [lam, c] : x) {
      auto it = idx.find(lam);
      if (it == idx.end()) throw std::invalid_argument("vector outside the domain basis");
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Rational& e = entries[r][it->second];
        if (e == 0) continue;
        Rational& slot = y[rows[r]];
        slot += e * c;
        if (slot == 0) y.erase(rows[r]);
      }
    }
    return y;
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << "row\\col";
    for (const auto& c : cols) os << ",\"" << c << '"';
    os << '\n';
    for (std::size_t r = 0; r < rows.size(); ++r) {
      os << '"' << rows[r] << '"';
      for (const auto& e : entries[r]) os << ',' << e.get_str();
      os << '\n';
    }
    return os.str();
  }
};

inline RatMatrix multiply(const RatMatrix& a, const RatMatrix& b, std::size_t bcols) {
  RatMatrix c(a.size(), std::vector<Rational>(bcols, Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a[i].size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < bcols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

/// All multipartitions obtained by removing one box.
inline std::vector<Multipartition> removals(const Multipartition& lam) {
  std::vector<Multipartition> out;
  std::vector<int> zero(static_cast<std::size_t>(lam.level()), 0);
  for (const auto& mb : addable_removable(lam, zero))
    if (mb.kind == BoxKind::Removable) out.push_back(lam.without(mb.box));
  return out;
}

inline std::vector<Multipartition> additions(const Multipartition& lam) {
  std::vector<Multipartition> out;
  std::vector<int> zero(static_cast<std::size_t>(lam.level()), 0);
  for (const auto& mb : addable_removable(lam, zero))
    if (mb.kind == BoxKind::Addable) out.push_back(lam.with(mb.box));
  return out;
}

/// [Res]: K(n) -> K(n-1), column lambda = sum of lambda minus a removable box.
inline KMatrix res_matrix(int n, int l, long long cap = kDefaultEnumerationCap) {
  if (n < 1) throw PreconditionError("restriction needs n >= 1");
  KMatrix m;
  m.cols = enumerate_multipartitions(n, l, cap);
  m.rows = enumerate_multipartitions(n - 1, l, cap);
  auto idx = index_of(m.rows);
  m.entries.assign(m.rows.size(), std::vector<Rational>(m.cols.size(), Rational(0)));
  for (std::size_t c = 0; c < m.cols.size(); ++c)
    for (const auto& mu : removals(m.cols[c])) m.entries[idx.at(mu)][c] += 1;
  return m;
}

/// [Ind]: K(n) -> K(n+1), the transpose of [Res] from n+1.
inline KMatrix ind_matrix(int n, int l, long long cap = kDefaultEnumerationCap) {
  if (n < 0) throw PreconditionError("induction needs n >= 0");
  KMatrix r = res_matrix(n + 1, l, cap);
  KMatrix m;
  m.rows = r.cols;
  m.cols = r.rows;
  m.entries.assign(m.rows.size(), std::vector<Rational>(m.cols.size(), Rational(0)));
  for (std::size_t i = 0; i < r.rows.size(); ++i)
    for (std::size_t j = 0; j < r.cols.size(); ++j) m.entries[j][i] = r.entries[i][j];
  return m;
}

/// The unique lambda whose one-box removals are exactly S.
inline Multipartition recover_from_removals(const std::set<Multipartition>& S) {
  if (S.empty()) throw PreconditionError("empty removal set has no preimage");
  const Multipartition& first = *S.begin();
  if (first.size() < 1)
    throw PreconditionError("recovery needs n > 1 (removal sets of size-1 multipartitions are ambiguous)");
  for (const auto& mu : S)
    if (mu.size() != first.size() || mu.level() != first.level())
      throw PreconditionError("removal set mixes sizes or levels");
  std::vector<Multipartition> hits;
  for (const auto& cand : additions(first)) {
    auto rem = removals(cand);
    if (std::set<Multipartition>(rem.begin(), rem.end()) == S) hits.push_back(cand);
  }
  if (hits.empty()) throw PreconditionError("no multipartition has this removal set");
  if (hits.size() > 1) {
    std::string msg = "removal set is ambiguous:";
    for (const auto& h : hits) msg += " " + h.to_string();
    throw PreconditionError(msg);
  }
  return hits.front();
}

// ---------------------------------------------------------------------------
// Orderings

/// lambda >_{s,m} mu: equal residue multisets and
/// sum_r |mu^{(r)}|(l m_r - r) > sum_r |lambda^{(r)}|(l m_r - r), r = 0..l-1,
/// with index 0 read as l.
inline bool order_sm(const Multipartition& lam, const Multipartition& mu, const std::vector<int>& s,
                     const std::vector<int>& m) {
  if (lam.size() != mu.size() || lam.level() != mu.level() || static_cast<int>(m.size()) != lam.level())
    throw std::invalid_argument("order_sm needs equal size and level");
  if (residue_multiset(lam, s) != residue_multiset(mu, s)) return false;
  const int l = lam.level();
  long sl = 0, smu = 0;
  for (int r = 0; r < l; ++r) {
    const int comp = r == 0 ? l : r;
    const long weight = static_cast<long>(l) * m[static_cast<std::size_t>(comp - 1)] - r;
    sl += lam[comp].size() * weight;
    smu += mu[comp].size() * weight;
  }
  return smu > sl;
}

/// lambda >_{s*} mu: strict dominance and equal residue multisets for the
/// given charge (pass s*).
inline bool order_sstar(const Multipartition& lam, const Multipartition& mu, const std::vector<int>& sstar) {
  return strictly_dominates(lam, mu) && residue_multiset(lam, sstar) == residue_multiset(mu, sstar);
}

/// lambda >' mu: w^{-1}(lambda)* strictly dominates w^{-1}(mu)*, with equal
/// s*-residue multisets of those starred multipartitions.
inline bool order_prime(const Multipartition& lam, const Multipartition& mu, const std::vector<int>& w,
                        const std::vector<int>& s) {
  const auto winv = inverse_permutation(w);
  const Multipartition a = star(permute_components(lam, winv));
  const Multipartition b = star(permute_components(mu, winv));
  const auto ss = star_params(s);
  return strictly_dominates(a, b) && residue_multiset(a, ss) == residue_multiset(b, ss);
}

// ---------------------------------------------------------------------------
// Joint injectivity of ([Res], c-hat-ch)

struct InjectivityReport {
  bool injective = true;
  std::size_t dimension = 0;
  std::size_t rank = 0;
  std::vector<Multipartition> basis;
  std::optional<std::vector<Rational>> kernel_vector;
};

namespace detail {

/// Rows expressing sum_lambda x_lambda ch-hat(lambda) = 0 after grouping the
/// exponents by coset mod Z and clearing the common denominator (q^l)_n.
inline RatMatrix chhat_equations(const std::vector<Multipartition>& family, const ParamKS& p) {
  struct Coset {
    Scalar base;
    std::vector<std::pair<std::size_t, QPoly>> members;
  };
  std::vector<Coset> cosets;
  int n = family.empty() ? 0 : family.front().size();
  std::vector<int> top;
  for (int i = 1; i <= n; ++i) top.push_back(i * p.l);
  const QPoly D = one_minus_q_product(top);
  for (std::size_t k = 0; k < family.size(); ++k) {
    const auto& lam = family[k];
    std::vector<int> den;
    for (const auto& part : lam.components())
      for (int h : hooks(part)) den.push_back(h * p.l);
    QPoly poly = divide_exact(D, one_minus_q_product(den));
    Scalar g = c_hat(lam, p);
    bool placed = false;
    for (auto& c : cosets) {
      Scalar d = g - c.base;
      if (!d.is_integer()) continue;
      c.members.emplace_back(k, poly.shifted(static_cast<int>(d.rational_value().get_num().get_si())));
      placed = true;
      break;
    }
    if (!placed) cosets.push_back({g, {{k, poly}}});
  }
  RatMatrix rows;
  for (const auto& c : cosets) {
    std::set<int> exps;
    for (const auto& [k, poly] : c.members)
      for (const auto& [e, x] : poly.terms()) exps.insert(e);
    for (int e : exps) {
      std::vector<Rational> row(family.size(), Rational(0));
      for (const auto& [k, poly] : c.members) row[k] = poly.coeff(e);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace detail

/// Rank of the span of ch-hat(Delta(mu)) over the given family.
inline std::size_t chhat_rank(const std::vector<Multipartition>& family, const ParamKS& p) {
  return rank(detail::chhat_equations(family, p), family.size());
}

/// Decides injectivity of v -> ([Res] v, ch-hat(v)) on K(n) by exact rank.
inline InjectivityReport joint_injectivity(int n, int l, const ParamKS& p, long long cap = kDefaultEnumerationCap) {
  if (p.l != l) throw PreconditionError("parameter level differs from l");
  InjectivityReport rep;
  rep.basis = enumerate_multipartitions(n, l, cap);
  rep.dimension = rep.basis.size();
  RatMatrix rows = detail::chhat_equations(rep.basis, p);
  if (n >= 1) {
    KMatrix res = res_matrix(n, l, cap);
    for (auto& r : res.entries) rows.push_back(r);
  }
  auto ker = kernel_basis(rows, rep.dimension);
  rep.rank = rep.dimension - ker.size();
  rep.injective = ker.empty();
  if (!ker.empty()) rep.kernel_vector = ker.front();
  return rep;
}

}  // namespace cherednik
