#include <catch_amalgamated.hpp>

#include <vector>

#include "wbar/delta.hpp"

using namespace wbar;

namespace {

std::vector<int> vals(const MonotoneMap& f) { return {f.values().begin(), f.values().end()}; }

// Every function [m] -> [n] as a value list, filtered to the monotone ones.
std::vector<std::vector<int>> brute_force_monotone(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(m + 1, 0);
  while (true) {
    bool mono = true;
    for (int i = 0; i < m; ++i) mono = mono && v[i] <= v[i + 1];
    if (mono) out.push_back(v);
    int pos = m;
    while (pos >= 0 && v[pos] == n) v[pos--] = 0;
    if (pos < 0) break;
    ++v[pos];
  }
  return out;
}

}  // namespace

TEST_CASE("coface and codegeneracy values") {
  CHECK(vals(coface(1, 0)) == std::vector{1});
  CHECK(vals(coface(2, 1)) == std::vector{0, 2});
  CHECK(vals(coface(2, 2)) == std::vector{0, 1});
  CHECK(vals(codegeneracy(0, 0)) == std::vector{0, 0});
  CHECK(vals(codegeneracy(1, 0)) == std::vector{0, 0, 1});
  CHECK(vals(codegeneracy(1, 1)) == std::vector{0, 1, 1});
  CHECK_THROWS_AS(coface(2, 3), DimensionError);
  CHECK_THROWS_AS(codegeneracy(1, 2), DimensionError);
}

TEST_CASE("compose applies the first map first") {
  const auto f = compose(codegeneracy(1, 0), coface(2, 1));
  CHECK(f.src() == 2);
  CHECK(f.dst() == 2);
  CHECK(vals(f) == std::vector{0, 0, 2});
  CHECK(compose(coface(1, 0), codegeneracy(0, 0)) == MonotoneMap::identity(0));
  for (const auto& theta : all_monotone_maps(2, 3)) {
    CHECK(compose(MonotoneMap::identity(2), theta) == theta);
    CHECK(compose(theta, MonotoneMap::identity(3)) == theta);
  }
  CHECK_THROWS_AS(compose(coface(1, 0), coface(1, 0)), DimensionError);
}

TEST_CASE("compose is associative") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d)
          for (const auto& f : all_monotone_maps(a, b))
            for (const auto& g : all_monotone_maps(b, c))
              for (const auto& h : all_monotone_maps(c, d))
                REQUIRE(compose(compose(f, g), h) == compose(f, compose(g, h)));
}

TEST_CASE("factorize examples") {
  const auto f = factorize(MonotoneMap(2, 2, {0, 0, 2}));
  CHECK(f.degeneracy_indices == std::vector{0});
  CHECK(f.face_indices == std::vector{1});
  CHECK(f.intermediate_dim == 1);
  CHECK(recompose(f) == MonotoneMap(2, 2, {0, 0, 2}));

  const auto id = factorize(MonotoneMap::identity(3));
  CHECK(id.degeneracy_indices.empty());
  CHECK(id.face_indices.empty());

  const auto face = factorize(coface(2, 1));
  CHECK(face.degeneracy_indices.empty());
  CHECK(face.face_indices == std::vector{1});
}

TEST_CASE("factorize and recompose are inverse on all maps up to [4]") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (const auto& theta : all_monotone_maps(m, n)) {
        const auto f = factorize(theta);
        REQUIRE(recompose(f) == theta);
        REQUIRE(f.src() == m);
        REQUIRE(f.dst() == n);
        for (std::size_t i = 1; i < f.degeneracy_indices.size(); ++i)
          REQUIRE(f.degeneracy_indices[i - 1] < f.degeneracy_indices[i]);
        for (std::size_t i = 1; i < f.face_indices.size(); ++i)
          REQUIRE(f.face_indices[i - 1] > f.face_indices[i]);
      }
}

TEST_CASE("recompose rejects non-canonical index lists") {
  CHECK_THROWS_AS(recompose({{1, 0}, {}, 1}), DimensionError);
  CHECK_THROWS_AS(recompose({{}, {0, 1}, 1}), DimensionError);
  CHECK_THROWS_AS(recompose({{}, {}, -1}), DimensionError);
}

TEST_CASE("all_monotone_maps matches brute force") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      const auto expected = brute_force_monotone(m, n);
      const auto got = all_monotone_maps(m, n);
      REQUIRE(got.size() == expected.size());
      for (std::size_t i = 0; i < got.size(); ++i) REQUIRE(vals(got[i]) == expected[i]);
    }
}

TEST_CASE("restrict examples") {
  CHECK(restrict_to(coface(2, 1), 0, 1) == MonotoneMap(0, 1, {0}));
  CHECK(restrict_to(MonotoneMap::identity(3), 2, 2) == MonotoneMap::identity(2));
  CHECK(restrict_to(coface(2, 0), 1, 2) == MonotoneMap(1, 2, {1, 2}));
  CHECK_THROWS_AS(restrict_to(coface(2, 0), 1, 1), DimensionError);
  CHECK_THROWS_AS(restrict_to(coface(2, 0), 2, 2), DimensionError);
}

TEST_CASE("splitting examples") {
  auto [low, high] = splitting(coface(2, 1), 1);
  CHECK(low == MonotoneMap(1, 2, {0, 2}));
  CHECK(high == MonotoneMap(0, 0, {0}));

  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      for (const auto& theta : all_monotone_maps(m, n)) {
        auto [l0, h0] = splitting(theta, 0);
        CHECK(l0 == MonotoneMap(0, theta(0), {theta(0)}));
        if (theta(0) == 0) CHECK(h0 == theta);
        auto [lm, hm] = splitting(theta, m);
        CHECK(vals(lm) == vals(theta));
        CHECK(lm.dst() == theta(m));
        CHECK(hm == MonotoneMap(0, n - theta(m), {0}));
      }
}

TEST_CASE("tau values") {
  CHECK(vals(tau(2, 0).as_map()) == std::vector{0, 0, 0});
  CHECK(vals(tau(2, 3).as_map()) == std::vector{1, 1, 1});
  CHECK(vals(tau(2, 1).as_map()) == std::vector{0, 0, 1});
  CHECK_THROWS_AS(tau(2, 4), DimensionError);
}

TEST_CASE("apply_operator_to_tau agrees with composing maps") {
  CHECK(apply_operator_to_tau(tau(3, 2), coface(3, 3)) == tau(2, 1));
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      for (const auto& theta : all_monotone_maps(m, n)) {
        CHECK(apply_operator_to_tau(tau(n, 0), theta) == tau(m, 0));
        CHECK(apply_operator_to_tau(tau(n, n + 1), theta) == tau(m, m + 1));
        for (int k = 0; k <= n + 1; ++k)
          REQUIRE(apply_operator_to_tau(tau(n, k), theta).as_map() ==
                  compose(theta, tau(n, k).as_map()));
      }
}

TEST_CASE("map strings round trip and reject garbage") {
  const auto f = MonotoneMap(2, 2, {0, 0, 2});
  CHECK(f.to_string() == "2->2:0,0,2");
  CHECK(MonotoneMap::parse("2->2:0,0,2") == f);
  CHECK(MonotoneMap::parse("0->3:3") == MonotoneMap(0, 3, {3}));
  CHECK_THROWS_AS(MonotoneMap::parse("1->1:1,0"), ParseError);
  CHECK_THROWS_AS(MonotoneMap::parse("1->1:0"), ParseError);
  CHECK_THROWS_AS(MonotoneMap::parse("1->1:0,2"), ParseError);
  CHECK_THROWS_AS(MonotoneMap::parse("1-1:0,1"), ParseError);
  CHECK_THROWS_AS(MonotoneMap::parse(""), ParseError);
  CHECK_THROWS_AS(MonotoneMap(1, 1, {1, 0}), DimensionError);
}
