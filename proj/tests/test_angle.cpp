#include <doctest.h>

#include "fibermovie/angle.hpp"

using namespace fibermovie;

TEST_CASE("rational arithmetic normalizes") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -3) == Rational(-1, 3));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3, 4) == Rational(1, 4));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(3, 4) < Rational(4, 5));
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational(5).str() == "5");
}

TEST_CASE("rational parse round trips and rejects junk") {
  CHECK(Rational::parse("3/8") == Rational(3, 8));
  CHECK(Rational::parse("-2") == Rational(-2));
  CHECK(Rational::parse(Rational(-5, 12).str()) == Rational(-5, 12));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("angles wrap into the unit interval") {
  CHECK(Angle(Rational(5, 4)) == Angle(1, 4));
  CHECK(Angle(Rational(-1, 4)) == Angle(3, 4));
  CHECK(Angle(Rational(1)) == Angle());
  CHECK(Angle::forward_distance(Angle(3, 4), Angle(1, 4)) == Rational(1, 2));
  CHECK(Angle::forward_midpoint(Angle(7, 8), Angle(1, 8)) == Angle());
  CHECK(Angle::forward_midpoint(Angle(1, 4), Angle(1, 4)) == Angle(3, 4));
}

TEST_CASE("arc intervals are open and may wrap") {
  const ArcInterval plain{Angle(1, 4), Angle(1, 2)};
  CHECK(plain.contains(Angle(3, 8)));
  CHECK_FALSE(plain.contains(Angle(1, 4)));
  CHECK_FALSE(plain.contains(Angle(1, 2)));
  const ArcInterval wrapped{Angle(3, 4), Angle(1, 4)};
  CHECK(wrapped.contains(Angle()));
  CHECK_FALSE(wrapped.contains(Angle(1, 2)));
  CHECK(wrapped.length() == Rational(1, 2));
  const ArcInterval punctured{Angle(1, 3), Angle(1, 3)};
  CHECK(punctured.contains(Angle(1, 2)));
  CHECK_FALSE(punctured.contains(Angle(1, 3)));
  CHECK(punctured.length() == Rational(1));
}
