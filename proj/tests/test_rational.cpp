#include "succession/rational.hpp"

#include <doctest.h>

using namespace succession;

TEST_CASE("decimal and fraction literals parse exactly") {
  CHECK(parse_rational("0.5") == Rational(1, 2));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7/2") == Rational(-7, 2));
  CHECK(parse_rational("12") == Rational(12));
  CHECK(parse_rational("6/4") == Rational(3, 2));
}

TEST_CASE("malformed literals are rejected") {
  for (const char* bad : {"", " 1", "1 ", "1/0", "1.", ".5", "a", "1/-2", "--1", "1e3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), NumberFormatError);
  }
}

TEST_CASE("formatting prefers terminating decimals") {
  CHECK(format_rational(Rational(1, 4)) == "0.25");
  CHECK(format_rational(Rational(-3, 2)) == "-1.5");
  CHECK(format_rational(Rational(7)) == "7");
  CHECK(format_rational(Rational(1, 3)) == "1/3");
  CHECK(format_rational(Rational(-2, 3)) == "-2/3");
  CHECK(format_rational(Rational(0)) == "0");
  CHECK(has_terminating_decimal(Rational(3, 40)));
  CHECK_FALSE(has_terminating_decimal(Rational(1, 6)));
}

TEST_CASE("format then parse is the identity") {
  for (int p = -12; p <= 12; ++p) {
    for (int q = 1; q <= 12; ++q) {
      const Rational r(p, q);
      CHECK(parse_rational(format_rational(r)) == r);
    }
  }
}
