#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cherednik/crystal.hpp"
#include "cherednik/errors.hpp"
#include "cherednik/fock.hpp"
#include "cherednik/linalg.hpp"

namespace cherednik {

/// Which tensor factor F(Lambda_{s_k}) is split off first when building the
/// bar involution on F(Lambda_{s_1}) x ... x F(Lambda_{s_l}).
enum class BarSeed { First, Last };

/// Anti-linear bar involution on F(Lambda_s).
///
/// Let k be the seed component.  On vectors with lambda^{(k)} empty the
/// involution is the one of the level l-1 space on the other components.
/// Otherwise pick a removable i-box B of lambda^{(k)}; F_i M_{lambda - B}
/// contains M_lambda with a monomial coefficient, and every other term has a
/// smaller k-th component, so bar(F_i x) = F_i bar(x) determines bar(M_lambda).
class BarInvolution {
 public:
  explicit BarInvolution(std::vector<int> s, BarSeed seed = BarSeed::First, int box_choice = 0)
      : space_(static_cast<int>(s.size()), s), s_(std::move(s)), seed_(seed), choice_(box_choice) {
    if (s_.size() > 1) {
      std::vector<int> rest = s_;
      rest.erase(rest.begin() + static_cast<long>(seed_index()));
      sub_ = std::make_unique<BarInvolution>(rest, seed_, choice_);
    }
  }

  const FockSpace& space() const { return space_; }

  /// bar(M_lambda).
  const FockVector& of_basis(const Multipartition& lam) {
    if (lam.level() != static_cast<int>(s_.size())) throw std::invalid_argument("level mismatch in bar involution");
    if (auto it = memo_.find(lam); it != memo_.end()) return it->second;
    FockVector out = compute(lam);
    return memo_.emplace(lam, std::move(out)).first->second;
  }

  FockVector operator()(const FockVector& x) {
    FockVector y;
    for (const auto& [lam, c] : x) y = add(std::move(y), of_basis(lam), c.bar());
    return y;
  }

 private:
  std::size_t seed_index() const { return seed_ == BarSeed::First ? 0 : s_.size() - 1; }

  FockVector compute(const Multipartition& lam) {
    const std::size_t k = seed_index();
    const int comp = static_cast<int>(k) + 1;
    if (lam[comp].empty()) {
      if (!sub_) return basis_vector(lam);  // level 1 and lambda empty
      std::vector<Partition> rest = lam.components();
      rest.erase(rest.begin() + static_cast<long>(k));
      FockVector y;
      for (const auto& [mu, c] : sub_->of_basis(Multipartition(rest))) {
        auto parts = mu.components();
        parts.insert(parts.begin() + static_cast<long>(k), Partition());
        y.emplace(Multipartition(parts), c);
      }
      return y;
    }
    std::vector<Box> rem;
    for (const auto& mb : addable_removable(lam, s_))
      if (mb.kind == BoxKind::Removable && mb.box.m == comp) rem.push_back(mb.box);
    const Box b = rem[static_cast<std::size_t>(choice_) % rem.size()];
    const int i = residue(b, s_);
    const Multipartition mu = lam.without(b);
    const FockVector fmu = space_.F(i, basis_vector(mu));
    const VPoly lead = fmu.at(lam);
    // bar(M_lambda) = lead-bar^{-1} (F_i bar(M_mu) - sum_{C != B} c-bar bar(M_{mu+C}))
    FockVector acc = space_.F(i, FockVector(of_basis(mu)));
    for (const auto& [nu, c] : fmu)
      if (nu != lam) acc = add(std::move(acc), of_basis(nu), -c.bar());
    if (lead.term_count() != 1) throw InternalError("leading coefficient of F_i is not a monomial");
    const auto& [e, coef] = *lead.bar().terms().begin();
    return detail::scale(acc, VPoly::monomial(-e, 1 / coef));
  }

  FockSpace space_;
  std::vector<int> s_;
  BarSeed seed_;
  int choice_;
  std::unique_ptr<BarInvolution> sub_;
  std::map<Multipartition, FockVector> memo_;
};

/// Bilinear form with <M_lambda, M_mu> = delta.
inline VPoly inner_product(const FockVector& x, const FockVector& y) {
  VPoly r;
  for (const auto& [lam, c] : x)
    if (auto it = y.find(lam); it != y.end()) r += c * it->second;
  return r;
}

/// Partial sums of the dominance order; lex order on them extends dominance.
inline std::vector<int> dominance_key(const Multipartition& lam) {
  std::vector<int> key;
  int acc = 0;
  for (const auto& p : lam.components())
    for (int t = 1; t <= lam.size(); ++t) key.push_back(acc += p.row(t));
  return key;
}

/// Residue blocks of P_l(n), each sorted along a linear extension of dominance.
inline std::vector<std::vector<Multipartition>> residue_blocks(int n, const std::vector<int>& s,
                                                               long long cap = kDefaultEnumerationCap) {
  std::map<std::vector<int>, std::vector<Multipartition>> by_key;
  for (const auto& lam : enumerate_multipartitions(n, static_cast<int>(s.size()), cap))
    by_key[residue_multiset(lam, s)].push_back(lam);
  std::vector<std::vector<Multipartition>> out;
  for (auto& [key, block] : by_key) {
    std::stable_sort(block.begin(), block.end(), [](const Multipartition& a, const Multipartition& b) {
      return dominance_key(a) < dominance_key(b);
    });
    out.push_back(std::move(block));
  }
  return out;
}

/// One residue block of the d-matrix: d[{mu, lambda}] for nonzero entries.
struct DMatrixBlock {
  std::vector<Multipartition> block;  // increasing dominance
  std::map<std::pair<Multipartition, Multipartition>, VPoly> entries;

  VPoly at(const Multipartition& mu, const Multipartition& lam) const {
    auto it = entries.find({mu, lam});
    return it == entries.end() ? VPoly() : it->second;
  }
};

struct DMatrix {
  int n = 0;
  std::vector<int> s;
  std::vector<DMatrixBlock> blocks;
  std::map<Multipartition, FockVector> dual_canonical;  // L_lambda in the M basis

  VPoly at(const Multipartition& mu, const Multipartition& lam) const {
    for (const auto& b : blocks)
      if (std::find(b.block.begin(), b.block.end(), lam) != b.block.end()) return b.at(mu, lam);
    throw std::invalid_argument("multipartition outside the d-matrix");
  }
};

/// Dual canonical basis on a block from an arbitrary bar involution given as
/// bar(M_lambda) for lambda in the block (listed along a linear extension of
/// the triangularity order).  Shared by both bar constructions.
template <class BarOf>
DMatrixBlock solve_block(const std::vector<Multipartition>& block, BarOf&& bar_of,
                         std::map<Multipartition, FockVector>& L) {
  DMatrixBlock out;
  out.block = block;
  std::map<Multipartition, std::size_t> pos;
  for (std::size_t k = 0; k < block.size(); ++k) pos[block[k]] = k;
  for (std::size_t k = 0; k < block.size(); ++k) {
    const auto& lam = block[k];
    FockVector r = add(FockVector(bar_of(lam)), basis_vector(lam), VPoly(-1L));
    for (const auto& [mu, c] : r) {
      auto it = pos.find(mu);
      if (it == pos.end() || it->second >= k)
        throw InternalError("bar involution is not unitriangular at " + lam.to_string() + " (term " +
                            mu.to_string() + ")");
    }
    FockVector Ll = basis_vector(lam);
    for (std::size_t j = k; j-- > 0;) {
      const auto& mu = block[j];
      auto it = r.find(mu);
      if (it == r.end()) continue;
      const VPoly b = it->second;
      if (!(b + b.bar()).is_zero())
        throw InternalError("triangular solve did not converge at " + lam.to_string() + ": coefficient " +
                            b.to_string('v') + " is not anti-symmetric");
      r = add(std::move(r), L.at(mu), -b);
      const VPoly c = b.positive_part();
      if (c.is_zero()) continue;
      Ll = add(std::move(Ll), L.at(mu), c);
      out.entries[{mu, lam}] = -c;
    }
    if (!r.empty()) throw InternalError("triangular solve left a residue at " + lam.to_string());
    out.entries[{lam, lam}] = VPoly(1L);
    L[lam] = std::move(Ll);
  }
  return out;
}

inline DMatrix d_matrix(int n, BarInvolution& bar, long long cap = kDefaultEnumerationCap) {
  DMatrix d;
  d.n = n;
  d.s = bar.space().charge();
  for (const auto& block : residue_blocks(n, d.s, cap))
    d.blocks.push_back(
        solve_block(block, [&](const Multipartition& lam) -> const FockVector& { return bar.of_basis(lam); },
                    d.dual_canonical));
  return d;
}

inline DMatrix d_matrix(int n, const std::vector<int>& s, long long cap = kDefaultEnumerationCap) {
  BarInvolution bar(s);
  return d_matrix(n, bar, cap);
}

/// Row of the radical table: [rad^j Delta(lambda*) / rad^{j+1} : L(mu*)].
struct RadicalEntry {
  Multipartition lambda_star, mu_star;
  int layer;
  Rational multiplicity;
};

inline void require_strictly_decreasing(const std::vector<int>& s) {
  for (std::size_t j = 1; j < s.size(); ++j)
    if (!(s[j - 1] > s[j])) throw PreconditionError("s not strictly decreasing: need s_1 > ... > s_l");
}

inline std::vector<RadicalEntry> radical_table(const DMatrix& d) {
  require_strictly_decreasing(d.s);
  std::vector<RadicalEntry> out;
  for (const auto& b : d.blocks)
    for (const auto& lam : b.block)
      for (const auto& mu : b.block) {
        const VPoly x = b.at(mu, lam);
        for (const auto& [j, c] : x.terms()) out.push_back({star(lam), star(mu), j, c});
      }
  return out;
}

struct GramResult {
  std::vector<Multipartition> labels;      // crystal-singular lambda
  std::vector<std::vector<VPoly>> gram_v;  // <L_lambda, L_mu>_v
  RatMatrix gram_q;
  Rational determinant;
};

/// Gram matrix of <,>_v on span{L_lambda : lambda singular} in degree n,
/// specialized at v = q.
inline GramResult gram_singular(int n, const std::vector<int>& s, const Rational& q,
                                long long cap = kDefaultEnumerationCap) {
  if (q == 0) throw PreconditionError("q must be nonzero");
  GramResult g;
  g.labels = singular_vertices(n, s, cap);
  if (g.labels.empty()) {
    g.determinant = 1;
    return g;
  }
  const DMatrix d = d_matrix(n, s, cap);
  const std::size_t k = g.labels.size();
  g.gram_v.assign(k, std::vector<VPoly>(k));
  g.gram_q.assign(k, std::vector<Rational>(k, Rational(0)));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      g.gram_v[a][b] = inner_product(d.dual_canonical.at(g.labels[a]), d.dual_canonical.at(g.labels[b]));
      g.gram_q[a][b] = g.gram_v[a][b].eval(q);
    }
  g.determinant = determinant(g.gram_q);
  return g;
}

}  // namespace cherednik
