#include "lpat/bigint.hpp"
#include "lpat/errors.hpp"

#include <doctest.h>

#include <random>

using namespace lpat;

TEST_CASE("isqrt small values") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(16) == 4);
  CHECK(isqrt(pow2(23)) == 2896);
  CHECK(2896 * 2896 == 8386816);
}

TEST_CASE("isqrt matches a counting oracle up to 10^4") {
  unsigned long s = 0;
  for (unsigned long v = 0; v <= 10000; ++v) {
    while ((s + 1) * (s + 1) <= v) ++s;
    REQUIRE(isqrt(BigInt(v)) == BigInt(s));
  }
}

TEST_CASE("isqrt brackets random large values") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    BigInt v = 0;
    const int limbs = 1 + t % 9;
    for (int i = 0; i < limbs; ++i) v = (v << 64) + BigInt(std::to_string(rng()));
    const BigInt s = isqrt(v);
    CHECK(s * s <= v);
    CHECK((s + 1) * (s + 1) > v);
  }
}

TEST_CASE("isqrt rejects negatives") { CHECK_THROWS_AS(isqrt(-1), DomainError); }

TEST_CASE("rational helpers") {
  CHECK(to_fraction_string(make_rational(4, 6)) == "2/3");
  CHECK(to_fraction_string(make_rational(0, 5)) == "0/1");
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
  CHECK(parse_rational("3/5") == Rational(3, 5));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("-1/2"), DomainError);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK(to_decimal_string(Rational(1, 6)) == "0.166666666667");
  CHECK(to_decimal_string(Rational(1, 2)) == "0.500000000000");
  CHECK(to_decimal_string(Rational(1)) == "1.000000000000");
  CHECK(to_decimal_string(Rational(2, 3), 2) == "0.67");
}
