#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genmat/grassmann.hpp"

using namespace genmat;

TEST_CASE("grassmannian dimension") {
  CHECK(gr_dim(2, 4) == 4);
  CHECK(gr_dim(0, 5) == 0);
  CHECK(gr_dim(5, 5) == 0);
  CHECK(gr_dim(2, 7) == 10);
  CHECK(gr_dim(1, 2) == 1);
  CHECK_THROWS_AS(gr_dim(3, 2), std::invalid_argument);
}

TEST_CASE("component codimension inside the ambient grassmannian") {
  CHECK(component_codim({1, 1}, {2, 2}) == 2);
  CHECK(component_codim({2, 0}, {3, 3}) == 6);
  // single block: no codimension at all
  CHECK(component_codim({2}, {4}) == 0);
  CHECK_THROWS_AS(component_codim({1}, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(component_codim({3, 0}, {2, 2}), std::invalid_argument);
}

TEST_CASE("codimension bound with equality classification") {
  // r=2 equal blocks of size 2, m=2: bound N - max = 2, met by (1,1)
  auto pg = prop_grass_check({2, 2}, 2);
  CHECK(pg.bound == 2);
  CHECK(pg.min_codim == 2);
  CHECK(pg.bound_ok);
  REQUIRE(pg.equality.size() == 1);
  CHECK(pg.equality[0] == std::vector<std::int64_t>{1, 1});
  CHECK(pg.classification_ok);
  CHECK(pg.ok());

  // blocks (3,3), m=2: strict inequality (min 4 > bound 3)
  auto pg2 = prop_grass_check({3, 3}, 2);
  CHECK(pg2.bound == 3);
  CHECK(pg2.min_codim == 4);
  CHECK(pg2.equality.empty());
  CHECK(pg2.ok());

  // single block: r=1 equality case, codim 0
  auto pg3 = prop_grass_check({4}, 2);
  CHECK(pg3.bound == 0);
  CHECK(pg3.min_codim == 0);
  CHECK(!pg3.equality.empty());
  CHECK(pg3.ok());
}

TEST_CASE("sweep over all block shapes up to total 10") {
  auto sweep = prop_grass_sweep(10);
  CHECK(sweep.all_ok);
  CHECK(sweep.monotone_ok);
  CHECK(sweep.cases == 696);  // regression: every (blocks, m) pair examined
}

TEST_CASE("elementary pair inequality has no violations up to r=4, entries 6") {
  auto le = lemma_elem_check(4, 6);
  CHECK(le.violations == 0);
  CHECK(le.cases == 269134);  // regression
  CHECK(le.ok());
  // equality exactly at the two families
  CHECK(le.equality_r1 > 0);
  CHECK(le.equality_r2_units == 1);  // the single multiset {(1,1),(1,1)}
  CHECK(le.classification_ok);
}

TEST_CASE("character space dimensions from residue differences") {
  auto cd = character_space_dims(EigenvalueProfile{{1, 1}, {0, 1}, 2});
  REQUIRE(cd.size() == 2);
  CHECK(cd.at(0) == 2);
  CHECK(cd.at(1) == 2);
  auto cd2 = character_space_dims(EigenvalueProfile{{2, 1}, {0, 1}, 2});
  CHECK(cd2.at(0) == 5);
  CHECK(cd2.at(1) == 4);
  // s = 1: everything lands in the trivial character
  auto cd3 = character_space_dims(EigenvalueProfile{{3}, {0}, 5});
  REQUIRE(cd3.size() == 1);
  CHECK(cd3.at(0) == 9);
  // dimensions always sum to n^2
  std::int64_t total = 0;
  for (auto& [mu, d] : cd2) total += d;
  CHECK(total == 9);
}

TEST_CASE("eigenvalue profiles validate") {
  EigenvalueProfile good{{2, 1}, {0, 1}, 2};
  good.validate();
  CHECK(good.n() == 3);
  EigenvalueProfile repeat{{1, 1}, {1, 1}, 2};
  CHECK_THROWS_AS(repeat.validate(), std::invalid_argument);
  // Exponents are taken mod q, so {0,3} with q=2 is just {0,1} in disguise.
  EigenvalueProfile big{{1, 1}, {0, 3}, 2};
  big.validate();
  EigenvalueProfile canon{{1, 1}, {0, 1}, 2};
  CHECK(character_space_dims(big) == character_space_dims(canon));
  // A genuine collision mod q is rejected even when the raw exponents differ.
  EigenvalueProfile collide{{1, 1}, {0, 2}, 2};
  CHECK_THROWS_AS(collide.validate(), std::invalid_argument);
}

TEST_CASE("subspace-sum dimension bound holds exhaustively") {
  auto l5 = lemma5_check(4, 8);
  CHECK(l5.sum_violations == 0);
  CHECK(l5.a_violations == 0);
  CHECK(l5.b_violations == 0);
  CHECK(l5.profiles == 1134);  // regression
  // the n=2 two-subspace exception region: equality everywhere, reported
  CHECK(l5.n2_two_space_cases == 10);
  CHECK(l5.n2_exception_all_equality);
  CHECK(l5.ok());
}

TEST_CASE("lemma5 spot values at the pinned profiles") {
  // n=3, l=(2,1), q=2, m=2: strict inequality expected
  auto l5 = lemma5_check(3, 2);
  CHECK(l5.sum_violations == 0);
  CHECK(l5.b_violations == 0);
  CHECK(l5.ok());
}
