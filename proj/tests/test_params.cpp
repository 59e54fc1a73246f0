#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cherednik/params.hpp"
#include "oracles.hpp"

using namespace cherednik;

static const Scalar K = Scalar::kappa();

TEST_CASE("scalar arithmetic") {
  CHECK(Scalar::parse("-1/2 + 3*k^-1", 2).to_string() == Scalar::parse("3*k^-1 - 1/2", 2).to_string());
  for (int l = 1; l <= 6; ++l) {
    Scalar sum;
    for (int a = 0; a < l; ++a) sum += Scalar::zeta(l, a);
    CHECK(sum == Scalar(l == 1 ? 1L : 0L));
    CHECK(Scalar::zeta(l, l) == Scalar(1L));
    CHECK(Scalar::zeta(l, 1) * Scalar::zeta(l, -1) == Scalar(1L));
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  auto draw = [&](int l) {
    Scalar x;
    for (int t = 0; t < 3; ++t) x += Scalar::kappa_power(d(rng), Cyclotomic::zeta(l, d(rng))) * Scalar(static_cast<long>(d(rng)));
    return x;
  };
  for (int t = 0; t < 200; ++t) {
    const int l = 1 + t % 5;
    const Scalar a = draw(l), b = draw(l), c = draw(l);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) * c == a * c + b * c);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a - a == Scalar());
    REQUIRE(Scalar::parse(a.to_string(), l) == a);
  }
}

TEST_CASE("eps and c parameters") {
  auto p = make_param(2, 1, K, {1, 0});
  CHECK(eps_of(p, 1) == K);
  CHECK(eps_of(make_param(3, 1, K, {2, 2, 2}), 2) == Scalar());
  CHECK(eps_of(make_param(2, 1, K, {4, 9}), 1) == K * Scalar(-5L));
  CHECK_THROWS(eps_of(p, 2));
  CHECK(c_of(make_param(3, 1, K, {1, 5, 2}))[0] == -K);
  CHECK(c_of(make_param(2, 1, K, {3, 3}))[1] == Scalar(make_rational(-1, 2)));
  std::mt19937_64 rng(3);
  for (int l = 2; l <= 4; ++l)
    for (int t = 0; t < 10; ++t) {
      std::vector<int> s(static_cast<std::size_t>(l));
      for (auto& x : s) x = static_cast<int>(rng() % 9) - 4;
      const auto q = make_param(l, 1, K, s);
      const auto eps = eps_from_c(c_of(q), l);
      for (int i = 1; i < l; ++i) CHECK(eps[static_cast<std::size_t>(i)] == eps_of(q, i));
    }
}

TEST_CASE("S_l action") {
  auto p = make_param(2, 2, K, {-1, 0});
  CHECK(sl_act({0, 1}, p).s == p.s);
  CHECK(sl_act({1, 0}, p).s == to_scalars({0, -1}));
  auto q = make_param(3, 1, K, {1, 2, 3});
  const std::vector<int> a{1, 2, 0}, b{2, 1, 0};
  std::vector<int> ab(3);
  for (int i = 0; i < 3; ++i) ab[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(b[static_cast<std::size_t>(i)])];
  CHECK(sl_act(a, sl_act(b, q)).s == sl_act(ab, q).s);
  CHECK_THROWS(sl_act({0, 0}, p));
}

TEST_CASE("spherical locus") {
  const auto b2 = is_spherical(make_param(2, 2, K, {-1, 0}));
  CHECK_FALSE(b2.spherical);
  REQUIRE(b2.second_family);
  CHECK(b2.second_family->u == 1);
  CHECK(b2.second_family->k == 1);
  CHECK(b2.second_family->m == 1);
  CHECK(b2.second_family->khat == 1);
  CHECK(b2.to_string() == "aspherical u=1 k=1 m=1");
  const auto half = is_spherical(make_param(2, 2, Scalar(make_rational(1, 2)), {5, 0}));
  CHECK_FALSE(half.spherical);
  CHECK(half.first_family == std::pair<long, long>{1, 2});
  CHECK(is_spherical(make_param(2, 2, K, {5, 0})).spherical);
  CHECK_THROWS_AS(is_spherical(make_param(2, 2, Scalar(), {5, 0})), PreconditionError);
}

TEST_CASE("faithfulness") {
  CHECK(is_faithful(make_param(2, 1, K, {1, 0})));
  CHECK_FALSE(is_faithful(make_param(2, 1, K, {1, 1})));
  CHECK_FALSE(is_faithful(make_param(2, 1, Scalar(make_rational(1, 2)), {1, 0})));
  for (const auto& s : std::vector<std::vector<int>>{{1, 0}, {3, 3}, {0, -2}, {4}})
    for (const auto& kappa : {K, Scalar(make_rational(1, 3)), Scalar(make_rational(1, 2))}) {
      const auto p = make_param(static_cast<int>(s.size()), 1, kappa, s);
      CHECK(is_faithful(p) == is_faithful_h(h_of(p)));
    }
}

TEST_CASE("integral difference") {
  const auto p = make_param(2, 1, K, {0, 0});
  CHECK(integral_difference(p, p));
  CHECK(integral_difference(p, make_param(2, 1, K + Scalar(2L), {0, 0})));
  CHECK_FALSE(integral_difference(p, make_param(2, 1, K, {0, 1})));
  CHECK_THROWS_AS(integral_difference(p, make_param(2, 1, Scalar(1L), {0, 0})), PreconditionError);
}

TEST_CASE("parameter classes") {
  const auto one = param_classes(K, to_scalars({3, 3, 3}));
  CHECK(one.classes.size() == 1);
  const auto a = param_classes(K, stilde_of(to_scalars({0, 0}), {Rational(0), Rational(1)}));
  REQUIRE(a.classes.size() == 1);
  CHECK(a.offsets[0] == std::vector<long>{0, 0});
  const auto b = param_classes(K, stilde_of(to_scalars({0, 0}), {Rational(0), make_rational(1, 2)}));
  CHECK(b.classes.size() == 2);
  CHECK_THROWS_AS(param_classes(Scalar(make_rational(1, 3)), to_scalars({0, 1})), PreconditionError);
}

TEST_CASE("dominant reduction") {
  CHECK(dominant_reduce(std::vector<int>{1, 0, 2}).first == std::vector<int>{0, 1, 2});
  const auto [w, wm] = dominant_reduce(std::vector<int>{1, 3, 2});
  CHECK(wm == std::vector<int>{2, 1, 3});
  for (int l = 1; l <= 4; ++l) {
    std::vector<int> m(static_cast<std::size_t>(l), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == m.size()) {
        const auto got = dominant_reduce(m);
        const auto want = oracle::dominant_reduce(m);
        REQUIRE(got.second == want.second);
        REQUIRE(permutation_length(got.first) == permutation_length(want.first));
        REQUIRE(got.first == want.first);
        return;
      }
      for (int x = 0; x < 3; ++x) {
        m[k] = x;
        rec(k + 1);
      }
    };
    rec(0);
  }
}

TEST_CASE("star parameters and Hecke descriptors") {
  CHECK(star_params(std::vector<int>{0, 0, 0}) == std::vector<int>{0, 0, 0});
  CHECK(star_params(std::vector<int>{7, 5, 4}) == std::vector<int>{-5, -7, -4});
  std::mt19937_64 rng(11);
  for (int l = 1; l <= 5; ++l) {
    std::vector<int> s(static_cast<std::size_t>(l));
    for (auto& x : s) x = static_cast<int>(rng() % 11) - 5;
    CHECK(star_params(star_params(s)) == s);
  }
  const auto h = hecke_params(make_param(2, 1, Scalar(1L), {3, 1}));
  CHECK(h.degenerate);
  CHECK(h.Q == std::vector<std::string>{"3", "1"});
  const auto g = hecke_params(make_param(2, 1, K, {3, 1}));
  CHECK_FALSE(g.degenerate);
  CHECK(g.s_star == to_scalars({-3, -1}));
}
