#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ury/distance_set.hpp"

using namespace ury;

namespace {
DistanceSet random_graph_set() {
  return DistanceSet::explicit_bounded({Rational(0), Rational(1, 2), Rational(1)});
}
}  // namespace

TEST_CASE("contains") {
  auto S = random_graph_set();
  CHECK(S.contains(Rational(1, 2)));
  CHECK(S.contains(Rational(0)));
  CHECK_FALSE(S.contains(Rational(1, 3)));

  auto Q = DistanceSet::rational_bounded(Rational(1));
  CHECK(Q.contains(Rational(17, 24)));
  CHECK_FALSE(Q.contains(Rational(5, 4)));

  auto G = DistanceSet::grid_unbounded(Rational(1, 6));
  CHECK(G.contains(Rational(5, 6)));
  CHECK(G.contains(Rational(7)));
  CHECK_FALSE(G.contains(Rational(1, 4)));

  CHECK(DistanceSet::rational_unbounded().contains(Rational(1000, 7)));
}

TEST_CASE("add truncates at the cap") {
  auto Q = DistanceSet::rational_bounded(Rational(1));
  CHECK(Q.add(Rational(1, 2), Rational(3, 4)) == Rational(1));
  CHECK(Q.add(Rational(1, 3), Rational(0)) == Rational(1, 3));
  auto U = DistanceSet::rational_unbounded();
  CHECK(U.add(Rational(3, 2), Rational(2, 3)) == Rational(13, 6));
  CHECK_THROWS_AS(random_graph_set().add(Rational(1, 3), Rational(0)), Error);
}

TEST_CASE("validate") {
  CHECK(validate(random_graph_set()).empty());
  CHECK(validate(DistanceSet::explicit_bounded({Rational(0), Rational(1)})).empty());
  // 1/4+1/4 = 1/2 not in the set
  auto bad = DistanceSet::explicit_bounded({Rational(0), Rational(1, 4), Rational(1)});
  CHECK_FALSE(validate(bad).empty());
  CHECK(validate(DistanceSet::explicit_bounded({Rational(0)})).size() >= 1);
}

TEST_CASE("closure, commutativity, monotonicity on a valid explicit set") {
  auto S = DistanceSet::explicit_bounded(
      {Rational(0), Rational(1, 2), Rational(3, 4), Rational(1)});
  REQUIRE(validate(S).empty());
  const auto& vals = S.values();
  for (const auto& s : vals)
    for (const auto& t : vals) {
      Rational u = S.add(s, t);
      CHECK(S.contains(u));
      CHECK(u == S.add(t, s));
      for (const auto& s2 : vals)
        if (s <= s2) CHECK(S.add(s, t) <= S.add(s2, t));
      CHECK(S.add(s, S.cap()) == S.cap());  // absorbing cap
    }
}

TEST_CASE("value menu is deterministic and sorted by denominator") {
  auto Q = DistanceSet::rational_bounded(Rational(1));
  auto menu = Q.value_menu(3, Rational(1));
  REQUIRE(menu.size() == 4);
  CHECK(menu[0] == Rational(1));
  CHECK(menu[1] == Rational(1, 2));
  CHECK(menu[2] == Rational(1, 3));
  CHECK(menu[3] == Rational(2, 3));

  auto G = DistanceSet::grid_unbounded(Rational(1, 2));
  auto gm = G.value_menu(0, Rational(3, 2));
  REQUIRE(gm.size() == 3);
  CHECK(gm[0] == Rational(1, 2));
  CHECK(gm[2] == Rational(3, 2));
}
