#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "genuslab/closedform.hpp"
#include "genuslab/distributions.hpp"

#include <stdexcept>
#include <vector>

using namespace genuslab;

namespace {

std::vector<BigInt> big(std::initializer_list<long> values) {
  return std::vector<BigInt>(values.begin(), values.end());
}

}  // namespace

TEST_CASE("family names") {
  CHECK(parse_family("bouquet") == Family::Bouquet);
  CHECK(parse_family("dipole") == Family::Dipole);
  CHECK(family_name(Family::Dipole) == std::string("dipole"));
  CHECK_THROWS_AS(parse_family("torus"), std::invalid_argument);
}

TEST_CASE("bouquet distributions at small n") {
  CHECK(bouquet_distribution(1).coeffs == big({1}));
  CHECK(bouquet_distribution(2).coeffs == big({4, 2}));
  CHECK(bouquet_distribution(3).coeffs == big({40, 80}));
  CHECK(bouquet_distribution(4).coeffs == big({672, 3360, 1008}));
  CHECK(bouquet_distribution(5).coeffs == big({16128, 161280, 185472}));
  CHECK(bouquet_distribution(6).coeffs ==
        big({506880, 8870400, 24837120, 5702400}));
  CHECK_THROWS_AS(bouquet_distribution(0), std::invalid_argument);
}

TEST_CASE("dipole distributions at small n") {
  CHECK(dipole_distribution(1).coeffs == big({1}));
  CHECK(dipole_distribution(2).coeffs == big({1}));
  CHECK(dipole_distribution(3).coeffs == big({2, 2}));
  CHECK(dipole_distribution(4).coeffs == big({6, 30}));
  CHECK(dipole_distribution(5).coeffs == big({24, 360, 192}));
  CHECK(dipole_distribution(6).coeffs == big({120, 4200, 10080}));
  CHECK(dipole_distribution(7).coeffs == big({720, 50400, 337680, 129600}));
  CHECK(dipole_distribution(8).coeffs ==
        big({5040, 635040, 9419760, 15341760}));
  CHECK_THROWS_AS(dipole_distribution(0), std::invalid_argument);
  CHECK_THROWS_AS(dipole_distribution(-3), std::invalid_argument);
}

TEST_CASE("totals match the factorial counts") {
  CHECK(distribution_total(bouquet_distribution(2)) == 6);
  CHECK(distribution_total(bouquet_distribution(3)) == 120);
  CHECK(distribution_total(dipole_distribution(4)) == 36);
  for (int n = 1; n <= 60; ++n) {
    CHECK(distribution_total(bouquet_distribution(n)) ==
          embedding_count(Family::Bouquet, n));
    CHECK(distribution_total(dipole_distribution(n)) ==
          embedding_count(Family::Dipole, n));
  }
}

TEST_CASE("top coefficient sits at the maximum genus") {
  CHECK(max_genus(Family::Bouquet, 3) == 1);
  CHECK(max_genus(Family::Bouquet, 4) == 2);
  CHECK(max_genus(Family::Dipole, 1) == 0);
  CHECK(max_genus(Family::Dipole, 7) == 3);
  CHECK_THROWS_AS(max_genus(Family::Bouquet, 0), std::invalid_argument);
  for (int n = 1; n <= 40; ++n) {
    for (Family family : {Family::Bouquet, Family::Dipole}) {
      const GenusDistribution dist = family == Family::Bouquet
                                         ? bouquet_distribution(n)
                                         : dipole_distribution(n);
      CHECK(static_cast<int>(dist.coeffs.size()) == max_genus(family, n) + 1);
      CHECK(dist.coeffs.back() > 0);
      for (const BigInt& coeff : dist.coeffs) {
        CHECK(coeff >= 0);
      }
    }
  }
}

TEST_CASE("average genus from distributions") {
  CHECK(average_genus(bouquet_distribution(1)) == Rational(0));
  CHECK(average_genus(bouquet_distribution(2)) == frac(1, 3));
  CHECK(average_genus(dipole_distribution(3)) == frac(1, 2));
  CHECK(average_genus(dipole_distribution(4)) == frac(5, 6));
  CHECK(average_genus(bouquet_distribution(4)) == frac(16, 15));
}

TEST_CASE("distribution averages equal the closed forms") {
  for (int n = 1; n <= 60; ++n) {
    CHECK(average_genus(bouquet_distribution(n)) == avg_genus_bouquet_closed(n));
    CHECK(average_genus(dipole_distribution(n)) ==
          avg_genus_exact(Family::Dipole, n));
  }
}

TEST_CASE("rolling average table matches per-n distributions") {
  for (Family family : {Family::Bouquet, Family::Dipole}) {
    const auto table = average_genus_distribution_table(family, 30);
    for (int n = 1; n <= 30; ++n) {
      const GenusDistribution dist = family == Family::Bouquet
                                         ? bouquet_distribution(n)
                                         : dipole_distribution(n);
      CHECK(table[static_cast<std::size_t>(n)] == average_genus(dist));
    }
  }
}

TEST_CASE("genus polynomial evaluation") {
  const GenusDistribution b2 = bouquet_distribution(2);
  CHECK(genus_polynomial_eval(b2, Rational(1)) == Rational(6));
  CHECK(genus_polynomial_eval(b2, Rational(0)) == Rational(4));
  CHECK(genus_polynomial_eval(bouquet_distribution(3), Rational(2)) == Rational(200));
  CHECK(genus_polynomial_eval(b2, frac(1, 2)) == Rational(5));
  SUBCASE("evaluation at one is the total") {
    for (int n = 1; n <= 12; ++n) {
      const GenusDistribution dist = dipole_distribution(n);
      CHECK(genus_polynomial_eval(dist, Rational(1)) ==
            Rational(distribution_total(dist)));
    }
  }
}
