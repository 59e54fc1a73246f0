// Acceptance criteria.  Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.  Every check is exact; the only tolerances are the
// wall-clock budgets below.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cherednik/cherednik.hpp"
#include "oracles.hpp"

using namespace cherednik;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

constexpr std::uint64_t kSeed = 20240601;
const Scalar K = Scalar::kappa();

std::string show(const std::vector<int>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}

std::vector<int> random_vector(std::mt19937_64& rng, int l, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<int> s(static_cast<std::size_t>(l));
  for (auto& x : s) x = d(rng);
  return s;
}

std::vector<int> random_distinct(std::mt19937_64& rng, int l, int lo, int hi) {
  for (;;) {
    auto s = random_vector(rng, l, lo, hi);
    if (std::set<int>(s.begin(), s.end()).size() == s.size()) return s;
  }
}

// 1. B2 aspherical vector
Outcome c1() {
  Outcome o;
  const auto r = is_spherical(make_param(2, 2, K, {-1, 0}));
  if (r.spherical || !r.second_family) return o.fail("classified spherical"), o;
  const auto& c = *r.second_family;
  if (c.u != 1 || c.k != 1 || c.m != 1) o.fail("certificate " + r.to_string());
  o.detail = r.to_string() + " khat=" + std::to_string(c.khat);
  return o;
}

// 2. S_l-stability of the spherical locus
Outcome c2() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 2);
  const std::vector<Scalar> kappas{K, Scalar(make_rational(1, 2)), Scalar(make_rational(2, 3))};
  int aspherical = 0;
  for (int t = 0; t < 200; ++t) {
    const int l = 1 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 4);
    const ParamKS p = make_param(l, n, kappas[rng() % 3], random_vector(rng, l, -3, 3));
    const bool base = is_spherical(p).spherical;
    aspherical += !base;
    std::vector<int> sigma(static_cast<std::size_t>(l));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      if (is_spherical(sl_act(sigma, p)).spherical != base) o.fail("orbit of s=" + show(p.integer_charge()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  if (o.ok) o.detail = "200 parameters, " + std::to_string(aspherical) + " aspherical";
  return o;
}

// 3. spherical character identity with d_i = i l
Outcome c3() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 3);
  std::size_t count = 0;
  for (int l = 1; l <= 3; ++l)
    for (int n = 0; n <= 5; ++n)
      for (const Scalar& kappa : {K, Scalar(make_rational(1, 2)), Scalar(make_rational(2, 3))}) {
        const ParamKS p = make_param(l, n, kappa, random_vector(rng, l, -4, 4));
        for (const auto& lam : enumerate_multipartitions(n, l)) {
          ++count;
          if (!equivalent(chsph_delta(lam, p), chhat_delta(lam, p))) o.fail("differs at " + lam.to_string());
        }
      }
  if (o.ok) o.detail = std::to_string(count) + " characters";
  return o;
}

// 4. fake degrees against the coinvariant Hilbert series
Outcome c4() {
  Outcome o;
  for (int l = 1; l <= 3; ++l)
    for (int n = 0; n <= 4; ++n) {
      QPoly lhs;
      for (const auto& tau : enumerate_multipartitions(n, l))
        lhs += fake_degree(tau).scaled(Rational(static_cast<long>(oracle::irrep_dim(tau))));
      QPoly rhs(1L);
      for (int i = 1; i <= n; ++i) {
        QPoly b;
        for (int k = 0; k < i * l; ++k) b += QPoly::monomial(k);
        rhs *= b;
      }
      if (!(lhs == rhs)) o.fail("l=" + std::to_string(l) + " n=" + std::to_string(n));
    }
  if (o.ok) o.detail = "l<=3, n<=4";
  return o;
}

// 5. joint injectivity and the kappa = 1 rank drop
Outcome c5() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 5);
  int samples = 0;
  for (int l = 1; l <= 3; ++l)
    for (int n = 1; n <= 4; ++n)
      for (int t = 0; t < 20;) {
        const ParamKS p = make_param(l, n, K, random_distinct(rng, l, -6, 6));
        if (!is_spherical(p).spherical) continue;
        ++t;
        ++samples;
        const auto rep = joint_injectivity(n, l, p);
        if (!rep.injective) o.fail("not injective at l=" + std::to_string(l) + " n=" + std::to_string(n) +
                                   " s=" + show(p.integer_charge()));
      }
  const std::vector<Multipartition> fam{Multipartition::parse("[[1,1],[]]"), Multipartition::parse("[[2],[]]"),
                                        Multipartition::parse("[[1],[1]]")};
  const std::size_t generic = chhat_rank(fam, make_param(2, 2, K, {0, 0}));
  const std::size_t at_one = chhat_rank(fam, make_param(2, 2, Scalar(1L), {0, 0}));
  if (generic != 3 || at_one >= generic)
    o.fail("no rank drop: symbolic " + std::to_string(generic) + ", kappa=1 " + std::to_string(at_one));
  if (o.ok)
    o.detail = std::to_string(samples) + " spherical samples injective; kappa=1 family rank " +
               std::to_string(generic) + " -> " + std::to_string(at_one);
  return o;
}

// 6. residue-transpose identity and the ordering implication
Outcome c6() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 6);
  std::size_t fired = 0;
  for (int t = 0; t < 10; ++t)
    for (int l = 1; l <= 3; ++l) {
      const auto s = random_vector(rng, l, -4, 4);
      const auto m = dominant_reduce(random_vector(rng, l, -3, 3)).second;
      const auto ss = star_params(s);
      for (int n = 0; n <= 4; ++n) {
        const auto P = enumerate_multipartitions(n, l);
        for (const auto& lam : P) {
          std::multiset<int> neg;
          for (int x : oracle::residues(star(lam), ss)) neg.insert(-x);
          if (oracle::residues(lam, s) != neg) o.fail("identity fails at " + lam.to_string());
          for (const auto& mu : P)
            if (order_sstar(star(lam), star(mu), ss)) {
              ++fired;
              if (!order_sm(lam, mu, s, m))
                o.fail("implication fails at " + lam.to_string() + ", " + mu.to_string() + " s=" + show(s));
            }
        }
      }
    }
  if (o.ok) o.detail = std::to_string(fired) + " starred relations, all implied";
  return o;
}

// 7. quantum group relations on F(Lambda_s)_{<=3}
Outcome c7() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto& s : std::vector<std::vector<int>>{{0}, {2}, {1, 0}, {0, 0}, {0, 3}, {2, 0, 1}, {0, 0, 0}, {1, -1, 1}}) {
    const FockSpace fs(static_cast<int>(s.size()), s);
    const auto rep = verify_relations(fs, 3, fs.residue_window(3));
    checks += rep.checks;
    if (!rep.ok) o.fail("s=" + show(s) + ": " + rep.first_violation);
  }
  if (o.ok) o.detail = std::to_string(checks) + " identities";
  return o;
}

// 8. singular crystal vertices against the kernel of all E_i
Outcome c8() {
  Outcome o;
  const std::vector<std::vector<int>> charges{{0}, {3}, {-2}, {1, 0}, {0, 0}, {0, 2},
                                              {2, 0, 1}, {5, 0, 2}, {0, 0, 0}};
  std::size_t total = 0;
  for (const auto& s : charges) {
    const FockSpace fs(static_cast<int>(s.size()), s);
    for (int n = 0; n <= 4; ++n) {
      const std::size_t crystal_count = singular_vertices(n, s).size();
      const std::size_t kernel = singular_space_dim(fs, n);
      total += kernel;
      if (crystal_count != kernel)
        o.fail("s=" + show(s) + " n=" + std::to_string(n) + ": " + std::to_string(crystal_count) + " vs " +
               std::to_string(kernel));
    }
  }
  if (o.ok) o.detail = "9 charges, total singular dimension " + std::to_string(total);
  return o;
}

// 9. d-matrix invariants and the KL cross-check
Outcome c9() {
  Outcome o;
  const std::vector<std::vector<int>> charges{{0}, {1, 0}, {0, 1}, {0, 0}, {2, 0, 1}, {1, 0, -2}, {0, 0, 0}};
  for (const auto& s : charges) {
    const int l = static_cast<int>(s.size());
    BarInvolution bar(s);
    for (int n = 0; n <= 4; ++n) {
      for (const auto& lam : enumerate_multipartitions(n, l))
        if (bar(bar(basis_vector(lam))) != basis_vector(lam)) o.fail("bar^2 at " + lam.to_string());
      const DMatrix d = d_matrix(n, bar);
      for (const auto& [lam, L] : d.dual_canonical)
        if (bar(L) != L) o.fail("L not bar invariant at " + lam.to_string());
      for (const auto& blk : d.blocks)
        for (const auto& [key, x] : blk.entries) {
          const auto& [mu, lam] = key;
          if (mu == lam) {
            if (x != VPoly(1L)) o.fail("diagonal at " + lam.to_string());
            continue;
          }
          if (x.min_degree() < 1) o.fail("entry outside vZ[v] at " + lam.to_string());
          if (!strictly_dominates(lam, mu)) o.fail("entry outside dominance at " + lam.to_string());
          if (residue_multiset(lam, s) != residue_multiset(mu, s)) o.fail("entry crosses blocks");
          if (l == 1 || (n == 1 && std::set<int>(s.begin(), s.end()).size() == s.size()))
            o.fail("not the identity at s=" + show(s) + " n=" + std::to_string(n));
        }
    }
  }
  std::size_t compared = 0;
  for (const auto& s : std::vector<std::vector<int>>{{1, 0}, {2, 0}, {3, 0}, {4, 1}, {0, -3}})
    for (int n = 1; n <= 4; ++n) {
      const DMatrix d1 = d_matrix(n, s);
      const DMatrix d2 = HeckeWedgeOracle(s, n).d_matrix();
      for (const auto& blk : d1.blocks)
        for (const auto& lam : blk.block)
          for (const auto& mu : blk.block) {
            ++compared;
            if (blk.at(mu, lam) != d2.at(mu, lam))
              o.fail("KL disagreement at " + mu.to_string() + ", " + lam.to_string() + " s=" + show(s));
          }
    }
  if (o.ok) o.detail = "invariants hold; " + std::to_string(compared) + " entries agree with the KL route";
  return o;
}

// 10. bridge golden vector and round trip
Outcome c10() {
  Outcome o;
  const std::vector<int> s{7, 5, 4};
  const auto w = weight_tau(tableau_of(Multipartition::parse("[[1],[1,1],[]]"), s, 6));
  if (w != std::vector<int>{8, 7, 7, 7, 7, 7, 12, 12, 11, 11, 14, 14, 14}) o.fail("tau(A) = " + show(w));
  std::size_t count = 0;
  for (const auto& lam : enumerate_multipartitions(3, 3)) {
    ++count;
    if (lambda_of(tableau_of(lam, s, 6), s) != lam) o.fail("round trip at " + lam.to_string());
  }
  if (o.ok) o.detail = "golden vector and " + std::to_string(count) + " round trips";
  return o;
}

// 11. Gram nondegeneracy on the first nonzero singular degree.  Degree 0 is
// the vacuum alone, so the first positive degree is the informative one.
Outcome c11() {
  Outcome o;
  const std::vector<int> s{1, 0};
  if (gram_singular(0, s, Rational(2)).determinant == 0) o.fail("determinant vanishes at n=0");
  for (int n = 1; n <= 8; ++n) {
    const auto g = gram_singular(n, s, Rational(2));
    if (g.labels.empty()) continue;
    if (g.determinant == 0) o.fail("determinant vanishes at n=" + std::to_string(n));
    if (o.ok)
      o.detail = "n=0 vacuum and n=" + std::to_string(n) + ", " + std::to_string(g.labels.size()) +
                 " labels, det " + g.determinant.get_str();
    return o;
  }
  o.fail("no positive singular degree up to n=8");
  return o;
}

// 12. K-group commutator and recovery from removal sets
Outcome c12() {
  Outcome o;
  // [Ind][Res] - [Res][Ind] read as "apply Ind then Res" minus "apply Res then Ind"
  for (int l = 1; l <= 3; ++l)
    for (int n = 2; n <= 5; ++n) {
      const auto R = res_matrix(n + 1, l), I = ind_matrix(n, l);
      const auto Rn = res_matrix(n, l), In = ind_matrix(n - 1, l);
      const auto RI = multiply(R.entries, I.entries, I.cols.size());
      const auto IR = multiply(In.entries, Rn.entries, Rn.cols.size());
      for (std::size_t i = 0; i < RI.size(); ++i)
        for (std::size_t j = 0; j < RI.size(); ++j)
          if (RI[i][j] - IR[i][j] != Rational(i == j ? l : 0))
            o.fail("commutator at l=" + std::to_string(l) + " n=" + std::to_string(n));
    }
  std::size_t failures = 0;
  std::set<int> failing_n;
  std::string first;
  for (int l = 1; l <= 3; ++l)
    for (int n = 2; n <= 5; ++n)
      for (const auto& lam : enumerate_multipartitions(n, l)) {
        const auto r = removals(lam);
        std::string why;
        try {
          if (recover_from_removals(std::set<Multipartition>(r.begin(), r.end())) != lam) why = "wrong preimage";
        } catch (const PreconditionError& e) {
          why = e.what();
        }
        if (!why.empty()) {
          if (first.empty()) first = lam.to_string() + ": " + why;
          failing_n.insert(n);
          ++failures;
        }
      }
  if (failures) {
    std::string sizes;
    for (int n : failing_n) sizes += (sizes.empty() ? "" : ",") + std::to_string(n);
    o.fail(std::to_string(failures) + " removal sets not recovered (n in {" + sizes + "}), first " + first);
  }
  if (o.ok) o.detail = "commutator holds; all removal sets recovered";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "B2 aspherical vector", 1, c1},
      {2, "S_l-stability of the spherical locus", 10, c2},
      {3, "spherical character identity", 30, c3},
      {4, "fake-degree regular representation", 10, c4},
      {5, "joint injectivity and kappa=1 degeneration", 120, c5},
      {6, "residue-transpose identity and ordering implication", 30, c6},
      {7, "quantum group relations", 60, c7},
      {8, "crystal-kernel equality", 120, c8},
      {9, "d-matrix invariants and KL agreement", 300, c9},
      {10, "bridge golden vector and round trip", 5, c10},
      {11, "Gram nondegeneracy", 60, c11},
      {12, "K-group commutator and removal recovery", 10, c12},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (dt > c.budget_seconds) out.fail("over budget: " + std::to_string(dt) + " s");
    failed += !out.ok;
    std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << "): " << out.detail
              << " [" << static_cast<int>(dt * 1000) << " ms / " << c.budget_seconds << " s]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
