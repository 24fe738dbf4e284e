#include <doctest.h>

#include <random>
#include <set>

#include "gradedlc/lattice.hpp"
#include "support.hpp"

using namespace gradedlc;
using namespace testing_support;

TEST_CASE("block_of") {
  const SignPattern p = block_of(MultiDegree{2, 0, -1}, 3);
  CHECK(p.members == std::vector<bool>{true, true, false});
  CHECK(p.corner == MultiDegree{0, 0, -1});
  CHECK(block_of(MultiDegree{0, 0, 0, 0}).corner == MultiDegree{0, 0, 0, 0});
  const SignPattern neg = block_of(MultiDegree{-1, -1});
  CHECK(neg.members == std::vector<bool>{false, false});
  CHECK(neg.corner == MultiDegree{-1, -1});
  CHECK(neg.membership_string() == "00");
  CHECK_THROWS_AS(block_of(MultiDegree{1, 2}, 3), DimensionError);
}

TEST_CASE("enumerate_blocks") {
  const auto one = enumerate_blocks(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0].corner == MultiDegree{-1});
  CHECK(one[1].corner == MultiDegree{0});

  const auto two = enumerate_blocks(2);
  REQUIRE(two.size() == 4);
  std::set<MultiDegree> corners;
  for (const auto& p : two) corners.insert(p.corner);
  CHECK(corners == std::set<MultiDegree>{{0, 0}, {0, -1}, {-1, 0}, {-1, -1}});
  CHECK(two[0].corner == MultiDegree{-1, -1});
  CHECK(two[3].corner == MultiDegree{0, 0});

  CHECK(enumerate_blocks(3).size() == 8);
}

TEST_CASE("blocks partition the lattice") {
  const auto blocks = enumerate_blocks(3);
  for (const auto& u : box(3, 3)) {
    int hits = 0;
    for (const auto& p : blocks) hits += p.contains(u) ? 1 : 0;
    CHECK(hits == 1);
    CHECK(block_of(u).contains(u));
  }
}

TEST_CASE("box enumerates the cube in lexicographic order") {
  const auto b = box(2, 1);
  REQUIRE(b.size() == 9);
  CHECK(b.front() == MultiDegree{-1, -1});
  CHECK(b.back() == MultiDegree{1, 1});
  CHECK(std::is_sorted(b.begin(), b.end()));
}

TEST_CASE("ideal construction") {
  const CMonomialIdeal i = field_ideal({{1, 0}, {0, 1}, {1, 0}});
  CHECK(i.num_generators() == 2);
  CHECK(i.to_string() == "(X1, X2) over K");
  CHECK(i.usual_monomial());
  CHECK(i.num_vars() == 2);

  const CMonomialIdeal j = pid_ideal({{1, {1, 0}}, {0, {0, 2}}});
  CHECK(j.to_string() == "(Y*X1, X2^2) over K[Y]");
  CHECK(j.num_vars() == 3);
  CHECK(j.y_var() == 0);
  CHECK(j.x_var(1) == 1);
  CHECK(j.exponent(1, 2) == 2);
  CHECK(j.support_mask(0) == 0b011);
  CHECK_FALSE(j.usual_monomial());
  CHECK(j.y_inverted().to_string() == "(X1, X2^2) over K");
  CHECK(i.over_graded_pid().to_string() == "(X1, X2) over K[Y]");

  CHECK_THROWS_AS(CMonomialIdeal(1, BaseRing::Field, {{1, {1}}}), std::invalid_argument);
  CHECK_THROWS_AS(CMonomialIdeal(2, BaseRing::Field, {{0, {1}}}), DimensionError);
  CHECK_THROWS_AS(CMonomialIdeal(0, BaseRing::Field, {{0, {}}}), DimensionError);
  CHECK_THROWS_AS(CMonomialIdeal(1, BaseRing::Field, {}), std::invalid_argument);
  CHECK_THROWS_AS(i.check_degree(MultiDegree{1}), DimensionError);
  CHECK_THROWS_AS(i.y_var(), DimensionError);
}

TEST_CASE("the unit is a permitted generator") {
  const CMonomialIdeal unit = field_ideal({{0, 0}});
  CHECK(unit.num_generators() == 1);
  CHECK(unit.support_mask(0) == 0);
}
