#include <doctest.h>

#include "iecp/rational.hpp"

using iecp::parse_rational;
using iecp::Rational;

TEST_CASE("fractions are reduced to lowest terms") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -4/10 ") == Rational(-2, 5));
  CHECK(parse_rational("+7/1") == 7);
  CHECK(iecp::to_string(parse_rational("10/4")) == "5/2");
  CHECK(iecp::to_string(parse_rational("8/4")) == "2");
}

TEST_CASE("decimals convert exactly") {
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("2.5e-3") == Rational(1, 400));
  CHECK(parse_rational("1.5E2") == 150);
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("3.") == 3);
  CHECK(parse_rational("-0.75") == Rational(-3, 4));
}

TEST_CASE("integers") {
  CHECK(parse_rational("42") == 42);
  CHECK(parse_rational("123456789012345678901234567890") ==
        Rational(mpz_class("123456789012345678901234567890")));
}

TEST_CASE("malformed literals are rejected") {
  for (const char* bad : {"", "  ", "abc", "1/0", "1/", "/2", "1.2.3", "1e", "1/-2", "0x10", "1 2",
                          "e5", "."})
    CHECK_THROWS_AS(parse_rational(bad), iecp::ParseError);
}

TEST_CASE("to_string round trip") {
  for (const char* text : {"1", "-1", "5/8", "3/8", "1/2", "1000000007/3"})
    CHECK(iecp::to_string(parse_rational(text)) == text);
}
