#include <doctest.h>

#include "hqds/rational.hpp"

using namespace hqds;

TEST_CASE("parse and format round trip") {
  for (const char* s : {"0", "1", "-7", "3/2", "-22/7", "1000000/999999"}) {
    auto r = parse_rational(s);
    REQUIRE(r);
    CHECK(format_rational(*r) == s);
  }
}

TEST_CASE("parse canonicalizes") {
  CHECK(format_rational(*parse_rational("4/6")) == "2/3");
  CHECK(format_rational(*parse_rational("-4/-6")) == "2/3");
  CHECK(format_rational(*parse_rational("0/5")) == "0");
}

TEST_CASE("parse rejects junk") {
  for (const char* s : {"", "1/0", "a", "1.5", "1/ 2", " 1", "2/", "/3"}) {
    CHECK_FALSE(parse_rational(s));
  }
}

TEST_CASE("exact square roots") {
  CHECK(*exact_sqrt(Rational(4)) == 2);
  CHECK(*exact_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK(*exact_sqrt(Rational(0)) == 0);
  CHECK_FALSE(exact_sqrt(Rational(2)));
  CHECK_FALSE(exact_sqrt(Rational(1, 3)));
  CHECK_FALSE(exact_sqrt(Rational(-4)));
}

TEST_CASE("rational reconstruction from doubles") {
  CHECK(*reconstruct_rational(1.0 / 3.0, 1000, 1e-9) == Rational(1, 3));
  CHECK(*reconstruct_rational(-2.5, 1000, 1e-9) == Rational(-5, 2));
  CHECK(*reconstruct_rational(0.0, 1000, 1e-9) == 0);
  // sqrt(2) has no small-denominator representation at this tolerance
  CHECK_FALSE(reconstruct_rational(1.41421356237309515, 1000, 1e-12));
}
