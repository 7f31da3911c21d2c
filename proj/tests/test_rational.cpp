#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ury/rational.hpp"

using ury::Rational;

TEST_CASE("arithmetic is exact and normalized") {
  CHECK(Rational(1, 2) + Rational(3, 4) == Rational(5, 4));
  CHECK(Rational(3, 2) + Rational(2, 3) == Rational(13, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(7, 3) * Rational(3, 7) == Rational(1));
  CHECK(Rational(1, 6) / Rational(1, 3) == Rational(1, 2));
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(0));
  CHECK(ury::min(Rational(5, 4), Rational(1)) == Rational(1));
  CHECK(ury::max(Rational(5, 4), Rational(1)) == Rational(5, 4));
  CHECK(ury::abs(Rational(-3, 7)) == Rational(3, 7));
}

TEST_CASE("parse and print round-trip") {
  CHECK(Rational::parse("3/4").str() == "3/4");
  CHECK(Rational::parse("5").str() == "5");
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational(0).str() == "0");
  CHECK_THROWS_AS(Rational::parse("x"), ury::Error);
}

TEST_CASE("overflow is detected, not wrapped") {
  Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, ury::Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), ury::Error);
}

TEST_CASE("hash agrees with equality") {
  CHECK(Rational(2, 4).hash() == Rational(1, 2).hash());
  CHECK(Rational(1, 2).hash() != Rational(1, 3).hash());
}
