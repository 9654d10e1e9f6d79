#include <random>

#include "doctest.h"
#include "vnat/rational.hpp"

using namespace vnat;

TEST_CASE("make_rational is canonical") {
  const Rational a = make_rational(6, -4);
  CHECK(a.get_num() == -3);
  CHECK(a.get_den() == 2);
  CHECK(a == make_rational(-3, 2));
  CHECK(make_rational(0, 7) == 0);
  CHECK(make_rational(0, 7).get_den() == 1);
}

TEST_CASE("string round trips") {
  CHECK(to_string(make_rational(3, 1)) == "3");
  CHECK(to_string(make_rational(-3, 6)) == "-1/2");
  CHECK(to_fraction_string(make_rational(3)) == "3/1");
  CHECK(parse_rational("-10/4") == make_rational(-5, 2));
  CHECK(parse_rational("17") == 17);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000000);
  for (int i = 0; i < 2000; ++i) {
    const Rational q = make_rational(num(rng), den(rng));
    CHECK(parse_rational(to_string(q)) == q);
    CHECK(parse_rational(to_fraction_string(q)) == q);
  }
}

TEST_CASE("generalized binomial matches the factorial formula and the negative-m rule") {
  for (std::int64_t m = 0; m <= 20; ++m) {
    Integer row = 1;
    for (std::int64_t i = 0; i <= m + 2; ++i) {
      CHECK(binomial(m, i) == (i <= m ? row : Integer(0)));
      if (i <= m) row = row * (m - i) / (i + 1);
    }
  }
  // C(-m, i) = (-1)^i C(m + i - 1, i).
  for (std::int64_t m = 1; m <= 8; ++m) {
    for (std::int64_t i = 0; i <= 8; ++i) {
      const Integer expected = (i % 2 ? -1 : 1) * binomial(m + i - 1, i);
      CHECK(binomial(-m, i) == expected);
    }
  }
}

TEST_CASE("floor, ceil and fractional part") {
  CHECK(floor(make_rational(7, 2)) == 3);
  CHECK(floor(make_rational(-7, 2)) == -4);
  CHECK(ceil(make_rational(-7, 2)) == -3);
  CHECK(ceil(make_rational(6, 3)) == 2);
  CHECK(frac_part(make_rational(-1, 4)) == make_rational(3, 4));
  CHECK(frac_part(make_rational(9, 4)) == make_rational(1, 4));

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> num(-5000, 5000);
  std::uniform_int_distribution<std::int64_t> den(1, 97);
  for (int i = 0; i < 5000; ++i) {
    const Rational q = make_rational(num(rng), den(rng));
    const Rational f = frac_part(q);
    CHECK(f >= 0);
    CHECK(f < 1);
    CHECK(is_integer(q - f));
    CHECK(Rational(floor(q)) <= q);
    CHECK(q < Rational(floor(q)) + 1);
    CHECK(ceil(q) == -floor(-q));
  }
}

TEST_CASE("to_int64 rejects values out of range") {
  CHECK(to_int64(Integer(-42)) == -42);
  CHECK_THROWS(to_int64(Integer("100000000000000000000")));
}
