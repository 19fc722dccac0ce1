#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "genuslab/rational.hpp"

#include <stdexcept>
#include <string>

using namespace genuslab;

namespace {

// Parse a fixed-point decimal back into an exact rational (test-side only).
Rational rational_from_decimal(const std::string& text, int precision) {
  std::string digits = text;
  const auto dot = digits.find('.');
  if (dot != std::string::npos) {
    digits.erase(dot, 1);
  }
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(precision));
  return frac(BigInt(digits, 10), scale);
}

}  // namespace

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(11) == 39916800);
  CHECK(factorial(21) == BigInt("51090942171709440000"));  // past 64 bits
}

TEST_CASE("frac canonicalizes") {
  CHECK(frac(2, 4) == frac(1, 2));
  CHECK(frac(1, -2) == frac(-1, 2));
  CHECK(frac(-6, -4) == frac(3, 2));
  CHECK(frac(0, 7) == Rational(0));
  CHECK(frac(BigInt(30), BigInt(-12)) == frac(-5, 2));
  CHECK_THROWS_AS(frac(1, 0), std::invalid_argument);
  SUBCASE("denominator positive and reduced") {
    const Rational q = frac(-10, 15);
    CHECK(q.get_den() == 3);
    CHECK(q.get_num() == -2);
  }
}

TEST_CASE("fraction strings") {
  CHECK(fraction_string(frac(16, 15)) == "16/15");
  CHECK(fraction_string(frac(5, 1)) == "5");
  CHECK(fraction_string(frac(-1, 3)) == "-1/3");
  CHECK(fraction_string(Rational(0)) == "0");
  CHECK(parse_fraction("16/15") == frac(16, 15));
  CHECK(parse_fraction("-7") == Rational(-7));
  CHECK(parse_fraction("4/6") == frac(2, 3));
  CHECK_THROWS_AS(parse_fraction(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction("x/y"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fraction("1/0"), std::invalid_argument);
  SUBCASE("round trip is the identity on reduced rationals") {
    for (long num = -20; num <= 20; ++num) {
      for (long den = 1; den <= 12; ++den) {
        const Rational q = frac(num, den);
        CHECK(parse_fraction(fraction_string(q)) == q);
      }
    }
  }
}

TEST_CASE("decimal rendering") {
  CHECK(decimal_string(frac(1, 3), 5) == "0.33333");
  CHECK(decimal_string(frac(2, 3), 5) == "0.66667");
  CHECK(decimal_string(frac(16, 15), 6) == "1.066667");
  CHECK(decimal_string(Rational(7), 0) == "7");
  CHECK(decimal_string(Rational(0), 3) == "0.000");
  CHECK(decimal_string(frac(-1, 3), 5) == "-0.33333");

  SUBCASE("round half to even") {
    CHECK(decimal_string(frac(1, 8), 2) == "0.12");   // 0.125 -> even 12
    CHECK(decimal_string(frac(3, 8), 2) == "0.38");   // 0.375 -> even 38
    CHECK(decimal_string(frac(1, 2), 0) == "0");
    CHECK(decimal_string(frac(3, 2), 0) == "2");
    CHECK(decimal_string(frac(-1, 8), 2) == "-0.12");
  }

  SUBCASE("underflow keeps an unsigned zero") {
    BigInt huge;
    mpz_ui_pow_ui(huge.get_mpz_t(), 10, 40);
    CHECK(decimal_string(frac(BigInt(-1), huge), 30) ==
          "0.000000000000000000000000000000");
  }

  SUBCASE("negative precision rejected") {
    CHECK_THROWS_AS(decimal_string(frac(1, 3), -1), std::invalid_argument);
  }

  SUBCASE("round trip stays within one unit of the last digit") {
    const int precision = 30;
    const Rational tolerance = frac(1, BigInt("1000000000000000000000000000000"));
    for (long num = -9; num <= 9; ++num) {
      for (long den = 1; den <= 13; ++den) {
        const Rational q = frac(num, den);
        const Rational back = rational_from_decimal(decimal_string(q, precision), precision);
        CHECK(abs(back - q) <= tolerance);
      }
    }
  }
}

TEST_CASE("to_double") {
  CHECK(to_double(frac(1, 2)) == 0.5);
  CHECK(to_double(frac(16, 15)) == doctest::Approx(1.0666666666666667).epsilon(1e-15));
}
