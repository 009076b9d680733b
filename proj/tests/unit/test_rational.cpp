#include <doctest.h>

#include "kal/rational.hpp"
#include "kal/rng.hpp"

#include "oracles.hpp"

using kal::Rational;

TEST_CASE("parse reduces to lowest terms") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("3/6").str() == "1/2");
  CHECK(Rational::parse("0/7").str() == "0/1");
  CHECK(Rational::parse("-8/-13") == Rational(8, 13));
  CHECK(Rational::parse("-8/13") == Rational(-8, 13));
  CHECK(Rational::parse("8/-13") == Rational(-8, 13));
  CHECK(Rational::parse("+42") == Rational(42));
  CHECK(Rational::parse("176") == Rational(176));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(Rational::parse(""), kal::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), kal::ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), kal::ParseError);
  CHECK_THROWS_AS(Rational::parse("abc"), kal::ParseError);
  CHECK_THROWS_AS(Rational::parse("1 /2"), kal::ParseError);
  CHECK_THROWS_AS(Rational::parse("/2"), kal::ParseError);
  CHECK_THROWS_AS(Rational::parse("3/"), kal::ParseError);
  CHECK_THROWS_AS(Rational::parse("0x10"), kal::ParseError);
}

TEST_CASE("construction invariants") {
  CHECK(Rational(4, -6).str() == "-2/3"); // denominator sign normalized away
  CHECK(Rational(0, 5).str() == "0/1");
  CHECK_THROWS_AS(Rational(1, 0), kal::ParamError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), kal::ParamError);
}

TEST_CASE("field laws hold exactly on random rationals") {
  kal::SplitMix64 rng(2024);
  for (int t = 0; t < 500; ++t) {
    const Rational a(rng.range(-50, 50), rng.range(1, 20));
    const Rational b(rng.range(-50, 50), rng.range(1, 20));
    const Rational c(rng.range(-50, 50), rng.range(1, 20));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (!c.is_zero()) CHECK((a / c) * c == a);
  }
}

TEST_CASE("floor matches the truncate-and-fix oracle") {
  CHECK(Rational(7, 2).floor_int() == 3);
  CHECK(Rational(-7, 2).floor_int() == -4);
  CHECK(Rational(-8, 2).floor_int() == -4);
  CHECK(Rational(0).floor_int() == 0);
  CHECK(Rational(7, 2).ceil_int() == 4);
  CHECK(Rational(-7, 2).ceil_int() == -3);

  kal::SplitMix64 rng(77);
  for (int t = 0; t < 1000; ++t) {
    const long num = rng.range(-10000, 10000);
    const long den = rng.range(1, 97);
    const Rational r(num, den);
    CHECK(r.floor_int() == kal::test::floor_oracle(num, den));
  }
}

TEST_CASE("serialization round-trips") {
  kal::SplitMix64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const Rational r(rng.range(-100000, 100000), rng.range(1, 4096));
    CHECK(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("pow is exact repeated multiplication") {
  CHECK(kal::pow(Rational(3, 2), 0) == Rational(1));
  CHECK(kal::pow(Rational(3, 2), 4) == Rational(81, 16));
  CHECK(kal::pow(Rational(-1, 3), 3) == Rational(-1, 27));
}
