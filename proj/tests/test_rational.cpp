#include <doctest.h>

#include "hodgerep/errors.hpp"
#include "hodgerep/rational.hpp"

using namespace hodgerep;

TEST_CASE("rationals render as p/q in lowest terms") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(to_string(RationalVector{Rational(1, 2), Rational(3)}) == "(1/2, 3)");
}

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("exact inverse") {
  const RationalMatrix m{{2, -1}, {-1, 2}};
  const RationalMatrix inv = invert(m);
  CHECK(inv[0][0] == Rational(2, 3));
  CHECK(inv[0][1] == Rational(1, 3));
  CHECK(inv[1][1] == Rational(2, 3));
  CHECK_THROWS_AS(invert(RationalMatrix{{1, 2}, {2, 4}}), DomainError);
}
