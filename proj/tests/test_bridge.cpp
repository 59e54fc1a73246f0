#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cherednik/bridge.hpp"
#include "oracles.hpp"

using namespace cherednik;

static const Scalar K = Scalar::kappa();
static Multipartition mp(const char* text) { return Multipartition::parse(text); }

TEST_CASE("shape") {
  const TauShape sh = TauShape::from({7, 5, 4}, 6);
  CHECK(sh.heights == std::vector<int>{6, 4, 3});
  CHECK(sh.total() == 13);
  CHECK(sh.tau() == Partition{3, 3, 3, 2, 1, 1});
  CHECK(sh.first_row(2) == 3);
  CHECK_THROWS_AS(TauShape::from({1, 2}, 5), PreconditionError);
  CHECK_THROWS_AS(TauShape::from({5, 0}, 5), PreconditionError);
}

TEST_CASE("ground state") {
  const std::vector<int> s{7, 5, 4};
  const Tableau A0 = ground_state(TauShape::from(s, 6), s);
  CHECK(A0.cols[0] == std::vector<int>{7, 6, 5, 4, 3, 2});
  CHECK(A0.cols[1] == std::vector<int>{5, 4, 3, 2});
  CHECK(A0.at(1, 1) == 7);
  CHECK_FALSE(A0.at(1, 2).has_value());
  CHECK(A0.at(3, 2) == 5);
  CHECK(is_column_strict(A0));
  CHECK(lambda_of(A0, s) == Multipartition::empty(3));
  CHECK(weight_tau(A0) == std::vector<int>{7, 7, 7, 7, 7, 7, 11, 11, 11, 11, 14, 14, 14});
}

TEST_CASE("golden tableau") {
  const std::vector<int> s{7, 5, 4};
  const Tableau A = tableau_of(mp("[[1],[1,1],[]]"), s, 6);
  CHECK(A.reading() == std::vector<int>{8, 6, 5, 4, 3, 2, 6, 5, 3, 2, 4, 3, 2});
  CHECK(weight_tau(A) == std::vector<int>{8, 7, 7, 7, 7, 7, 12, 12, 11, 11, 14, 14, 14});
  CHECK(tableau_of(Multipartition::empty(3), s, 6) == ground_state(A.shape, s));
  CHECK_THROWS_AS(tableau_of(mp("[[4],[],[]]"), s, 6), PreconditionError);
}

TEST_CASE("bijection with column-strict tableaux above the ground state") {
  const std::vector<int> s{7, 5, 4};
  for (int n = 0; n <= 3; ++n) {
    const auto P = enumerate_multipartitions(n, 3);
    std::set<std::vector<std::vector<int>>> image;
    for (const auto& lam : P) {
      const Tableau A = tableau_of(lam, s, 6);
      CHECK(is_column_strict(A));
      CHECK(lambda_of(A, s) == lam);
      image.insert(A.cols);
    }
    CHECK(image == oracle::column_strict_above_ground(TauShape::from(s, 6), s, n));
  }
  for (const auto& ch : std::vector<std::vector<int>>{{3, 1}, {0, -1, -4}})
    for (int n = 0; n <= 3; ++n) {
      const int m = minimal_shape_m(ch, n);
      std::set<std::vector<std::vector<int>>> image;
      for (const auto& lam : enumerate_multipartitions(n, static_cast<int>(ch.size())))
        image.insert(tableau_of(lam, ch, m).cols);
      CHECK(image == oracle::column_strict_above_ground(TauShape::from(ch, m), ch, n));
    }
}

TEST_CASE("independence of m") {
  const std::vector<int> s{2, 0, -1};
  for (const auto& lam : enumerate_multipartitions(3, 3))
    for (int m = minimal_shape_m(s, 3); m <= 9; ++m) CHECK(lambda_of(tableau_of(lam, s, m), s) == lam);
}

TEST_CASE("label transport") {
  ParamKS p = make_param(3, 3, K, {7, 5, 4});
  const auto u = upsilon_labels(mp("[[1],[1,1],[]]"), p, 6);
  CHECK(u.s_star == std::vector<int>{-5, -7, -4});
  CHECK(u.lambda_star == star(mp("[[1],[1,1],[]]")));
  CHECK(weight_tau(u.parabolic) == std::vector<int>{8, 7, 7, 7, 7, 7, 12, 12, 11, 11, 14, 14, 14});
  CHECK(UpsilonLabels::functor_index(3) == -3);
  const auto e = upsilon_labels(Multipartition::empty(3), p);
  CHECK(e.lambda_star == Multipartition::empty(3));
  CHECK(e.parabolic == ground_state(e.parabolic.shape, {7, 5, 4}));
  CHECK(star(star(u.lambda_star)) == u.lambda_star);
  CHECK_THROWS_AS(upsilon_labels(mp("[[1],[],[]]"), make_param(3, 1, K, {4, 5, 7})), PreconditionError);
  ParamKS q = p;
  q.m = std::vector<Rational>{Rational(2), Rational(0), Rational(1)};
  CHECK_THROWS_AS(upsilon_labels(mp("[[1],[],[]]"), q), PreconditionError);
}
