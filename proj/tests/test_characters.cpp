#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cherednik/characters.hpp"
#include "oracles.hpp"

using namespace cherednik;

static const Scalar K = Scalar::kappa();
static Multipartition mp(const char* text) { return Multipartition::parse(text); }

TEST_CASE("c-function") {
  const ParamKS p = make_param(2, 1, K, {3, -2});
  CHECK(c_function(mp("[[1],[]]"), p) == Scalar(-1L) + K * Scalar(5L));
  CHECK(c_function(mp("[[],[1]]"), p) == K * Scalar(-5L));
  const ParamKS q = make_param(1, 4, K, {2});
  for (const auto& a : enumerate_multipartitions(4, 1))
    for (const auto& b : enumerate_multipartitions(4, 1)) {
      long ra = 0, rb = 0;
      for (int x : oracle::residues(a, {2})) ra += x;
      for (int x : oracle::residues(b, {2})) rb += x;
      CHECK(c_function(a, q) - c_function(b, q) == K * Scalar(ra - rb));
    }
}

TEST_CASE("fake degrees") {
  CHECK(fake_degree(mp("[[1]]")) == QPoly(1L));
  CHECK(fd(mp("[[1]]")) == 0);
  CHECK(fake_degree(mp("[[1],[],[]]")) == QPoly::monomial(1));
  CHECK(fake_degree(mp("[[],[1],[]]")) == QPoly::monomial(2));
  CHECK(fake_degree(mp("[[],[],[1]]")) == QPoly(1L));
  for (int l = 1; l <= 3; ++l)
    for (int n = 0; n <= 4; ++n) {
      QPoly regular;
      for (const auto& tau : enumerate_multipartitions(n, l)) {
        const QPoly f = fake_degree(tau);
        CHECK(f.eval(Rational(1)) == Rational(static_cast<long>(oracle::irrep_dim(tau))));
        CHECK(f.min_degree() == fd(tau));
        for (const auto& [e, c] : f.terms()) CHECK(c > 0);
        regular += f.scaled(Rational(static_cast<long>(oracle::irrep_dim(tau))));
      }
      // Hilbert series of the coinvariants: degrees l, 2l, ..., nl
      QPoly hilbert(1L);
      for (int i = 1; i <= n; ++i) {
        QPoly b;
        for (int k = 0; k < i * l; ++k) b += QPoly::monomial(k);
        hilbert *= b;
      }
      CHECK(regular == hilbert);
    }
}

TEST_CASE("c-hat") {
  const ParamKS p = make_param(2, 1, K, {1, 0});
  CHECK(fd(star(mp("[[1],[]]"))) == 1);
  CHECK(c_hat(mp("[[1],[]]"), p) == K);
  const ParamKS q = make_param(1, 2, K, {0});
  // l = 1, lambda = (2): kappa sum res - kappa n s_1 + n/2 with res {0, 1}
  CHECK(c_hat(mp("[[2]]"), q) == K + Scalar(1L));
  for (const auto& s : std::vector<std::vector<int>>{{4, -1}, {0, 2}})
    for (const auto& lam : enumerate_multipartitions(3, 2))
      CHECK_NOTHROW(c_hat(lam, make_param(2, 3, K, s)));
}

TEST_CASE("graded characters") {
  const ParamKS p = make_param(2, 1, K, {1, 0});
  const auto e = chhat_delta(Multipartition::empty(2), p);
  REQUIRE(e.terms.size() == 1);
  CHECK(e.terms[0].gamma == Scalar());
  CHECK(e.terms[0].den.empty());
  const auto one = chhat_delta(mp("[[1],[]]"), p);
  CHECK(one.terms[0].den == std::vector<int>{2});
  CHECK(one.terms[0].gamma == c_hat(mp("[[1],[]]"), p));
  CHECK(chhat_delta(mp("[[3,1],[]]"), p).terms[0].den == std::vector<int>{2, 2, 4, 8});
  const ParamKS q = make_param(1, 2, K, {0});
  const auto sph = chsph_delta(mp("[[2]]"), q);
  CHECK(sph.terms[0].den == std::vector<int>{1, 2});
  CHECK(equivalent(sph, chhat_delta(mp("[[2]]"), q)));
  for (int l = 1; l <= 3; ++l)
    for (int n = 0; n <= 4; ++n)
      for (const auto& lam : enumerate_multipartitions(n, l)) {
        const auto r = make_param(l, n, K, std::vector<int>(static_cast<std::size_t>(l), 1));
        REQUIRE(equivalent(chsph_delta(lam, r), chhat_delta(lam, r)));
      }
  CHECK_FALSE(equivalent(chhat_delta(mp("[[1],[]]"), p), chhat_delta(mp("[[],[1]]"), p)));
}
