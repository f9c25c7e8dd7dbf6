#include <catch2/catch_amalgamated.hpp>

#include "kemeny/error.hpp"
#include "kemeny/exact.hpp"

using namespace kemeny;

TEST_CASE("rationals normalise and print as p/q") {
  CHECK(Rational(BigInt(6), BigInt(-4)).str() == "-3/2");
  CHECK(Rational(BigInt(130), BigInt(24)).str() == "65/12");
  CHECK(Rational(5).str() == "5/1");
  CHECK(Rational(0).str() == "0/1");
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), Error);
}

TEST_CASE("decimal rendering rounds half to even") {
  CHECK(Rational(BigInt(65), BigInt(12)).decimal() == "5.4167");
  CHECK(Rational(BigInt(73), BigInt(12)).decimal() == "6.0833");
  CHECK(Rational(BigInt(1), BigInt(8)).decimal(2) == "0.12");
  CHECK(Rational(BigInt(3), BigInt(8)).decimal(2) == "0.38");
  CHECK(Rational(BigInt(5), BigInt(2)).decimal(0) == "2");
  CHECK(Rational(BigInt(7), BigInt(2)).decimal(0) == "4");
  CHECK(Rational(BigInt(-1), BigInt(8)).decimal(2) == "-0.12");
  CHECK(Rational(BigInt(-1), BigInt(3)).decimal(4) == "-0.3333");
  CHECK(Rational(BigInt(1), BigInt(2)).decimal() == "0.5000");
}

TEST_CASE("arithmetic and ordering") {
  const Rational a(BigInt(1), BigInt(3));
  const Rational b(BigInt(1), BigInt(6));
  CHECK(a + b == Rational(BigInt(1), BigInt(2)));
  CHECK(a - b == b);
  CHECK(a * b == Rational(BigInt(1), BigInt(18)));
  CHECK(a / b == Rational(2));
  CHECK(b < a);
  CHECK_THROWS_AS(a / Rational(0), Error);
}

TEST_CASE("parse_rational round trips") {
  for (const char* s : {"65/12", "-3/2", "0/1", "17/1", "123456789012345678901234567891/2"})
    CHECK(parse_rational(s).str() == s);
  CHECK(parse_rational("4").str() == "4/1");
  CHECK(parse_rational("2/4").str() == "1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x/2"), Error);
}

TEST_CASE("big integers print in full") {
  BigInt x = 1;
  for (int i = 0; i < 30; ++i) x *= 10;
  CHECK(to_string(x) == "1000000000000000000000000000000");
}
