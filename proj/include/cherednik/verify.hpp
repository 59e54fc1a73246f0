#pragma once

// Invariant suites shared by the CLI `verify` subcommand and the test tree.
// Each suite is deterministic given (max_n, seed).

#include <cstdint>
#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cherednik/cherednik.hpp"

namespace cherednik {

struct VerifyOptions {
  int max_n = 4;
  std::uint64_t seed = 0;
};

struct SuiteResult {
  std::string name;
  bool ok = true;
  std::size_t checks = 0;
  std::string detail;
};

namespace detail {

/// Records the first failure; later failures only bump the counter.
class Checker {
 public:
  explicit Checker(std::string name) { r_.name = std::move(name); }
  bool operator()(bool cond, const std::string& what) {
    ++r_.checks;
    if (!cond && r_.ok) {
      r_.ok = false;
      r_.detail = what;
    }
    return cond;
  }
  bool ok() const { return r_.ok; }
  SuiteResult done() {
    if (r_.ok) r_.detail = std::to_string(r_.checks) + " checks";
    return r_;
  }

 private:
  SuiteResult r_;
};

inline std::vector<int> random_charge(std::mt19937_64& rng, int l, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<int> s(static_cast<std::size_t>(l));
  for (auto& x : s) x = d(rng);
  return s;
}

/// Strictly decreasing integer charge.
inline std::vector<int> random_decreasing_charge(std::mt19937_64& rng, int l) {
  std::uniform_int_distribution<int> gap(1, 3), start(-2, 4);
  std::vector<int> s{start(rng)};
  for (int j = 1; j < l; ++j) s.push_back(s.back() - gap(rng));
  return s;
}

inline std::string show(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}

/// dim of the G_l(n)-irreducible tau: multinomial times hook-length counts.
inline Rational irrep_dimension(const Multipartition& tau) {
  Rational d = 1;
  int placed = 0;
  for (const auto& p : tau.components()) {
    for (int k = 1; k <= p.size(); ++k) d *= Rational(placed + k) / Rational(k);
    placed += p.size();
    Rational syt = 1;
    for (int k = 1; k <= p.size(); ++k) syt *= k;
    for (int h : hooks(p)) syt /= h;
    d *= syt;
  }
  return d;
}

}  // namespace detail

inline SuiteResult suite_combinatorics(const VerifyOptions& o) {
  detail::Checker c("combinatorics");
  std::mt19937_64 rng(o.seed);
  for (int l = 1; l <= 3; ++l)
    for (int n = 0; n <= o.max_n; ++n) {
      const auto P = enumerate_multipartitions(n, l);
      const auto s = detail::random_charge(rng, l, -4, 4);
      const auto ss = star_params(s);
      for (std::size_t k = 0; k < P.size(); ++k) {
        const auto& lam = P[k];
        c(star(star(lam)) == lam, "star is not an involution at " + lam.to_string());
        if (k > 0) c(lex_compare(P[k - 1], lam) == std::strong_ordering::less, "enumeration not lex sorted");
        int add = 0, rem = 0;
        for (const auto& mb : addable_removable(lam, s)) (mb.kind == BoxKind::Addable ? add : rem)++;
        c(add - rem == l, "addable minus removable differs from l at " + lam.to_string());
        auto neg = residue_multiset(star(lam), ss);
        for (auto& x : neg) x = -x;
        std::sort(neg.begin(), neg.end());
        c(residue_multiset(lam, s) == neg, "residue-transpose identity fails at " + lam.to_string() +
                                                " s=" + detail::show(s));
      }
      if (n <= 3)
        for (const auto& a : P)
          for (const auto& b : P) {
            const Dominance ab = dominance(a, b), ba = dominance(b, a);
            if (a == b)
              c(ab == Dominance::Equal, "dominance not reflexive");
            else
              c(!(ab == Dominance::Greater && ba == Dominance::Greater), "dominance not antisymmetric");
            for (const auto& x : P)
              if (strictly_dominates(a, b) && strictly_dominates(b, x))
                c(strictly_dominates(a, x), "dominance not transitive");
          }
    }
  // t(lambda) monotone for the lex order on P_2(min(max_n, 4))
  const int nt = std::min(o.max_n, 4);
  if (nt >= 1) {
    const auto P = enumerate_multipartitions(nt, 2);
    for (const auto& a : P)
      for (const auto& b : P)
        if (lex_compare(a, b) == std::strong_ordering::greater)
          c(lex_compare(t_of(a), t_of(b)) != std::strong_ordering::less,
            "t not monotone at " + a.to_string() + " > " + b.to_string());
  }
  return c.done();
}

inline SuiteResult suite_params(const VerifyOptions& o) {
  detail::Checker c("params");
  std::mt19937_64 rng(o.seed + 1);
  const auto b2 = is_spherical(make_param(2, 2, Scalar::kappa(), {-1, 0}));
  c(b2.to_string() == "aspherical u=1 k=1 m=1", "B2 vector classified as " + b2.to_string());
  const std::vector<Scalar> kappas{Scalar::kappa(), Scalar(make_rational(1, 2)), Scalar(make_rational(2, 3))};
  for (int t = 0; t < 200; ++t) {
    const int l = 1 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, std::min(o.max_n, 4))));
    const ParamKS p = make_param(l, n, kappas[rng() % 3], detail::random_charge(rng, l, -3, 3));
    const bool base = is_spherical(p).spherical;
    std::vector<int> sigma(static_cast<std::size_t>(l));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      c(is_spherical(sl_act(sigma, p)).spherical == base, "spherical locus not S_l-stable");
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  for (int l = 1; l <= 4; ++l)
    for (int t = 0; t < 20; ++t) {
      const auto s = detail::random_charge(rng, l, -5, 5);
      const ParamKS p = make_param(l, 1, Scalar::kappa(), s);
      const bool distinct = std::set<int>(s.begin(), s.end()).size() == s.size();
      c(is_faithful(p) == distinct, "symbolic faithfulness differs from distinctness at s=" + detail::show(s));
      c(star_params(star_params(s)) == s, "s* is not an involution");
      const auto eps = eps_from_c(c_of(p), l);
      for (int i = 1; i < l; ++i) c(eps[static_cast<std::size_t>(i)] == eps_of(p, i), "c/eps round trip fails");
    }
  c(star_params(std::vector<int>{7, 5, 4}) == std::vector<int>{-5, -7, -4}, "s* of (7,5,4)");
  return c.done();
}

inline SuiteResult suite_characters(const VerifyOptions& o) {
  detail::Checker c("characters");
  std::mt19937_64 rng(o.seed + 2);
  for (int l = 1; l <= 3; ++l) {
    const ParamKS p = make_param(l, 1, Scalar::kappa(), detail::random_charge(rng, l, -3, 3));
    for (int n = 0; n <= o.max_n; ++n) {
      QPoly regular;
      for (const auto& lam : enumerate_multipartitions(n, l)) {
        c(equivalent(chsph_delta(lam, p), chhat_delta(lam, p)), "spherical character identity fails at " +
                                                                    lam.to_string());
        const QPoly f = fake_degree(lam);
        c(f.min_degree() == fd(lam), "fd is not the least degree at " + lam.to_string());
        c(f.eval(Rational(1)) == detail::irrep_dimension(lam), "f(1) differs from dim at " + lam.to_string());
        regular += f.scaled(detail::irrep_dimension(lam));
      }
      QPoly hilbert(1L);
      for (int i = 1; i <= n; ++i) {
        QPoly bracket;
        for (int k = 0; k < i * l; ++k) bracket += QPoly::monomial(k);
        hilbert *= bracket;
      }
      c(regular == hilbert, "regular representation check fails at l=" + std::to_string(l) +
                                " n=" + std::to_string(n));
    }
  }
  return c.done();
}

inline SuiteResult suite_kgroup(const VerifyOptions& o) {
  detail::Checker c("kgroup");
  std::mt19937_64 rng(o.seed + 3);
  for (int l = 1; l <= 3; ++l)
    for (int n = 1; n <= o.max_n; ++n) {
      // [Res][Ind] - [Ind][Res] on K(n)
      const auto R = res_matrix(n + 1, l), I = ind_matrix(n, l);
      const auto Rn = res_matrix(n, l), In = ind_matrix(n - 1, l);
      const auto RI = multiply(R.entries, I.entries, I.cols.size());
      const auto IR = multiply(In.entries, Rn.entries, Rn.cols.size());
      bool ok = true;
      for (std::size_t i = 0; i < RI.size(); ++i)
        for (std::size_t j = 0; j < RI.size(); ++j)
          if (RI[i][j] - IR[i][j] != Rational(i == j ? l : 0)) ok = false;
      c(ok, "Res Ind - Ind Res != l Id at l=" + std::to_string(l) + " n=" + std::to_string(n));
      for (const auto& lam : Rn.cols) {
        const auto rem = removals(lam);
        const auto top = *std::max_element(rem.begin(), rem.end(), [](const auto& a, const auto& b) {
          return lex_compare(a, b) == std::strong_ordering::less;
        });
        c(top == t_of(lam), "largest removal is not t(lambda) at " + lam.to_string());
        if (n >= 3) {
          const std::set<Multipartition> S(rem.begin(), rem.end());
          bool back = false;
          try {
            back = recover_from_removals(S) == lam;
          } catch (const PreconditionError&) {
          }
          c(back, "recover_from_removals fails at " + lam.to_string());
        }
      }
    }
  for (int t = 0; t < 8; ++t) {
    const int l = 1 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::max(1, std::min(o.max_n, 3))));
    ParamKS p = make_param(l, n, Scalar::kappa(), detail::random_decreasing_charge(rng, l));
    if (!is_spherical(p).spherical) continue;
    const auto rep = joint_injectivity(n, l, p);
    c(rep.injective, "joint injectivity fails at l=" + std::to_string(l) + " n=" + std::to_string(n));
  }
  return c.done();
}

inline SuiteResult suite_crystal(const VerifyOptions& o) {
  detail::Checker c("crystal");
  std::mt19937_64 rng(o.seed + 4);
  for (int l = 1; l <= 3; ++l) {
    const auto s = detail::random_charge(rng, l, -3, 3);
    const FockSpace fs(l, s);
    CrystalDepth depth(s);
    for (int n = 0; n <= o.max_n; ++n) {
      for (const auto& lam : enumerate_multipartitions(n, l)) {
        for (int i : fs.residue_window(n)) {
          const auto st = crystal(lam, s, i);
          if (st.f) c(crystal(*st.f, s, i).e == lam, "e f != id at " + lam.to_string());
          if (st.e) c(crystal(*st.e, s, i).f == lam, "f e != id at " + lam.to_string());
          c(st.eps - st.phi == -fs.d_i(lam, i), "eps - phi != -d_i at " + lam.to_string());
          // shifting s and i together preserves the crystal
          std::vector<int> t = s;
          for (auto& x : t) x += 2;
          const auto sh = crystal(lam, t, i + 2);
          c(sh.e == st.e && sh.f == st.f, "crystal not shift invariant at " + lam.to_string());
        }
        c(is_singular(lam, s) == is_singular_by_suffix(lam, s), "suffix criterion disagrees at " + lam.to_string());
        c(depth(lam) <= lam.size(), "N exceeds size at " + lam.to_string());
      }
      if (l == 1) c(singular_vertices(n, s).size() == (n == 0 ? 1u : 0u), "level one has extra singular vertices");
      if (n <= std::min(o.max_n, 4))
        c(singular_vertices(n, s).size() == singular_space_dim(fs, n),
          "singular count differs from kernel dimension at s=" + detail::show(s) + " n=" + std::to_string(n));
    }
  }
  return c.done();
}

inline SuiteResult suite_fock(const VerifyOptions& o) {
  detail::Checker c("fock");
  std::mt19937_64 rng(o.seed + 5);
  const int n = std::min(o.max_n, 3);
  for (int l = 1; l <= 3; ++l) {
    const auto s = detail::random_charge(rng, l, -2, 2);
    FockSpace fs(l, s);
    const auto rep = verify_relations(fs, n, fs.residue_window(n));
    c(rep.ok, "relations fail at s=" + detail::show(s) + ": " + rep.first_violation);
    // <E_i x, y> = <x, v^{-1} F_i K_i y> on basis vectors
    for (int k = 1; k <= n; ++k)
      for (const auto& lam : enumerate_multipartitions(k, l))
        for (const auto& mu : enumerate_multipartitions(k - 1, l))
          for (int i : fs.residue_window(k)) {
            const VPoly lhs = inner_product(fs.E(i, basis_vector(lam)), basis_vector(mu));
            const VPoly rhs = inner_product(basis_vector(lam), fs.F(i, fs.K(i, basis_vector(mu))));
            c(lhs == rhs * VPoly::monomial(-1), "E_i adjoint fails at " + lam.to_string());
          }
  }
  if (n >= 2) {
    FockSpace bent(2, {1, 0});
    bent.set_perturbation(1);
    c(!verify_relations(bent, n, bent.residue_window(n)).ok, "perturbed action passes the relation check");
  }
  return c.done();
}

inline SuiteResult suite_canonical(const VerifyOptions& o) {
  detail::Checker c("canonical");
  std::mt19937_64 rng(o.seed + 6);
  std::vector<std::vector<int>> charges{{1, 0}, {0}};
  charges.push_back(detail::random_charge(rng, 2, -3, 3));
  charges.push_back(detail::random_charge(rng, 3, -2, 2));
  for (const auto& s : charges) {
    const int l = static_cast<int>(s.size());
    const int top = std::min(o.max_n, l == 3 ? 3 : 4);
    const bool distinct = std::set<int>(s.begin(), s.end()).size() == s.size();
    BarInvolution bar(s);
    const FockSpace& fs = bar.space();
    for (int n = 0; n <= top; ++n) {
      for (const auto& lam : enumerate_multipartitions(n, l)) {
        const FockVector m = basis_vector(lam);
        const FockVector b = bar(m);
        c(bar(b) == m, "bar^2 != id at " + lam.to_string());
        for (const auto& [mu, x] : b)
          c(mu == lam ? x == VPoly(1L) : strictly_dominates(lam, mu), "bar not unitriangular at " + lam.to_string());
        if (n < top)
          for (int i : fs.residue_window(n)) {
            c(bar(fs.E(i, m)) == fs.E(i, b), "bar does not commute with E at " + lam.to_string());
            c(bar(fs.F(i, m)) == fs.F(i, b), "bar does not commute with F at " + lam.to_string());
          }
      }
      const DMatrix d = d_matrix(n, bar);
      for (const auto& blk : d.blocks)
        for (const auto& [key, x] : blk.entries) {
          const auto& [mu, lam] = key;
          if (mu == lam) {
            c(x == VPoly(1L), "diagonal of d is not 1");
            continue;
          }
          c(!x.is_zero() && x.min_degree() >= 1, "off-diagonal d not in vZ[v]");
          c(strictly_dominates(lam, mu), "d entry outside dominance");
          c(residue_multiset(lam, s) == residue_multiset(mu, s), "d entry crosses residue blocks");
          c(l > 1 && (n > 1 || !distinct), "d is not the identity at l=1 or n=1");
        }
      for (const auto& [lam, L] : d.dual_canonical) c(bar(L) == L, "L not bar invariant at " + lam.to_string());
      for (const auto& [a, La] : d.dual_canonical)
        for (const auto& [b, Lb] : d.dual_canonical) {
          const VPoly g = inner_product(La, Lb);
          c(g == inner_product(Lb, La), "Gram not symmetric");
          c(g.coeff(0) == Rational(a == b ? 1 : 0) && (g.is_zero() || g.min_degree() >= 0),
            "<L, L> not delta mod v");
        }
    }
  }
  // quasi-R-matrix route against the Hecke/KL route
  const int kl_top = std::min(o.max_n, 3);
  for (const std::vector<int>& s : {std::vector<int>{1, 0}, std::vector<int>{3, 0}})
    for (int n = 1; n <= kl_top; ++n) {
      const DMatrix d1 = d_matrix(n, s);
      const DMatrix d2 = HeckeWedgeOracle(s, n).d_matrix();
      for (const auto& blk : d1.blocks)
        for (const auto& lam : blk.block)
          for (const auto& mu : blk.block)
            c(blk.at(mu, lam) == d2.at(mu, lam), "KL oracle disagrees at " + mu.to_string() + ", " +
                                                     lam.to_string() + " s=" + detail::show(s));
    }
  for (int n = 0; n <= std::min(o.max_n, 4); ++n) {
    const auto g = gram_singular(n, {1, 0}, Rational(2));
    c(g.determinant != 0, "singular Gram determinant vanishes at n=" + std::to_string(n));
  }
  return c.done();
}

inline SuiteResult suite_bridge(const VerifyOptions& o) {
  detail::Checker c("bridge");
  std::mt19937_64 rng(o.seed + 7);
  const std::vector<int> s{7, 5, 4};
  const Multipartition golden = Multipartition::parse("[[1],[1,1],[]]");
  c(weight_tau(tableau_of(golden, s, 6)) == std::vector<int>{8, 7, 7, 7, 7, 7, 12, 12, 11, 11, 14, 14, 14},
    "golden tau(A) vector differs");
  for (int t = 0; t < 4; ++t) {
    const int l = 1 + static_cast<int>(rng() % 3);
    const auto ch = detail::random_decreasing_charge(rng, l);
    for (int n = 0; n <= std::min(o.max_n, 3); ++n) {
      const int m = minimal_shape_m(ch, n);
      for (const auto& lam : enumerate_multipartitions(n, l)) {
        const Tableau A = tableau_of(lam, ch, m);
        c(is_column_strict(A), "A_lambda not column strict at " + lam.to_string());
        c(lambda_of(A, ch) == lam, "round trip fails at " + lam.to_string());
        c(lambda_of(tableau_of(lam, ch, m + 2), ch) == lam, "label depends on m at " + lam.to_string());
        c(weight_tau(A).size() == static_cast<std::size_t>(A.shape.total()), "weight length");
      }
    }
  }
  for (const auto& lam : enumerate_multipartitions(3, 3))
    c(lambda_of(tableau_of(lam, s, 6), s) == lam, "round trip fails on P_3(3) at " + lam.to_string());
  return c.done();
}

using Suite = std::function<SuiteResult(const VerifyOptions&)>;

inline const std::vector<std::pair<std::string, Suite>>& all_suites() {
  static const std::vector<std::pair<std::string, Suite>> suites{
      {"combinatorics", suite_combinatorics}, {"params", suite_params}, {"characters", suite_characters},
      {"kgroup", suite_kgroup},               {"crystal", suite_crystal}, {"fock", suite_fock},
      {"canonical", suite_canonical},         {"bridge", suite_bridge}};
  return suites;
}

/// Runs one named suite, or all of them for "all".
inline std::vector<SuiteResult> run_suites(const std::string& which, const VerifyOptions& o) {
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : all_suites())
    if (which == "all" || which == name) out.push_back(fn(o));
  if (out.empty()) throw PreconditionError("unknown suite: " + which);
  return out;
}

}  // namespace cherednik
