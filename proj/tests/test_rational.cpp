#include <doctest.h>

#include <limits>
#include <random>
#include <stdexcept>

#include "support.hpp"

using systema::Rational;

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("3").str() == "3");
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("2.75").str() == "11/4");
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational::parse("4/-8") == Rational(-1, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(2, 3) == Rational(-2, 3));
  CHECK(Rational(7, 3).fractionalPart() == Rational(1, 3));
  CHECK(Rational(-1, 3).fractionalPart() == Rational(2, 3));
  CHECK(Rational(6, 3).isInteger());
  CHECK(Rational(6, 3).toInt64() == 2);
  CHECK_THROWS(Rational(1, 2).toInt64());
}

TEST_CASE("rational values beyond int64 promote and demote") {
  const Rational big(std::numeric_limits<std::int64_t>::max());
  const Rational twice = big + big;
  CHECK(twice > big);
  CHECK(twice.str() == "18446744073709551614");
  CHECK(twice - big == big);
  CHECK((twice - big - big).isZero());
  CHECK((big * big) / big == big);
  const Rational minimum(std::numeric_limits<std::int64_t>::min());
  CHECK((-minimum).str() == "9223372036854775808");
  CHECK(-(-minimum) == minimum);
}

TEST_CASE("rational field laws on random values") {
  std::mt19937_64 rng(testing::kSeed);
  std::uniform_int_distribution<std::int64_t> num(-1'000'000'000'000LL, 1'000'000'000'000LL), den(1, 1'000'000'000LL);
  for (int i = 0; i < 500; ++i) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    if (!b.isZero()) CHECK((a / b) * b == a);
    CHECK(Rational::parse(a.str()) == a);
    CHECK(((a < b) || (b < a) || (a == b)));
  }
}
