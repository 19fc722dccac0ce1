#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "genuslab/closedform.hpp"

#include <cmath>
#include <stdexcept>

using namespace genuslab;

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0) == Rational(0));
  CHECK(harmonic(2) == frac(3, 2));
  CHECK(harmonic(4) == frac(25, 12));
  CHECK_THROWS_AS(harmonic(-1), std::invalid_argument);
}

TEST_CASE("bouquet closed form") {
  CHECK(avg_genus_bouquet_closed(1) == Rational(0));
  CHECK(avg_genus_bouquet_closed(2) == frac(1, 3));
  CHECK(avg_genus_bouquet_closed(3) == frac(2, 3));
  CHECK(avg_genus_bouquet_closed(4) == frac(16, 15));
  CHECK_THROWS_AS(avg_genus_bouquet_closed(0), std::invalid_argument);
}

TEST_CASE("bouquet recurrence") {
  CHECK(avg_genus_bouquet_recurrence(1) == Rational(0));
  CHECK(avg_genus_bouquet_recurrence(2) == frac(1, 3));
  CHECK(avg_genus_bouquet_recurrence(3) == frac(2, 3));
  CHECK(avg_genus_bouquet_recurrence(4) == frac(16, 15));
  CHECK(avg_genus_bouquet_recurrence(5) == frac(22, 15));
}

TEST_CASE("dipole closed form") {
  CHECK(avg_genus_dipole_closed(3) == frac(1, 2));
  CHECK(avg_genus_dipole_closed(4) == frac(5, 6));
  CHECK(avg_genus_dipole_closed(5) == frac(31, 24));
  CHECK_THROWS_AS(avg_genus_dipole_closed(2), std::invalid_argument);
  CHECK(avg_genus_exact(Family::Dipole, 1) == Rational(0));
  CHECK(avg_genus_exact(Family::Dipole, 2) == Rational(0));
  CHECK(avg_genus_exact(Family::Dipole, 3) == frac(1, 2));
}

TEST_CASE("dipole recurrence") {
  CHECK(avg_genus_dipole_recurrence(1) == Rational(0));
  CHECK(avg_genus_dipole_recurrence(2) == Rational(0));
  CHECK(avg_genus_dipole_recurrence(3) == frac(1, 2));
  CHECK(avg_genus_dipole_recurrence(4) == frac(5, 6));
  CHECK(avg_genus_dipole_recurrence(5) == frac(31, 24));
}

TEST_CASE("closed forms equal recurrences through n = 500") {
  const auto closed_b = avg_genus_bouquet_closed_table(500);
  const auto rec_b = avg_genus_bouquet_table(500);
  const auto closed_d = avg_genus_dipole_closed_table(500);
  const auto rec_d = avg_genus_dipole_table(500);
  for (long n = 1; n <= 500; ++n) {
    CHECK(closed_b[static_cast<std::size_t>(n)] == rec_b[static_cast<std::size_t>(n)]);
    CHECK(closed_d[static_cast<std::size_t>(n)] == rec_d[static_cast<std::size_t>(n)]);
  }
  SUBCASE("tables agree with scalar evaluation") {
    for (long n : {1L, 2L, 17L, 100L, 499L}) {
      CHECK(closed_b[static_cast<std::size_t>(n)] == avg_genus_bouquet_closed(n));
      if (n >= 3) {
        CHECK(closed_d[static_cast<std::size_t>(n)] == avg_genus_dipole_closed(n));
      }
    }
  }
  SUBCASE("denominators positive everywhere") {
    for (long n = 1; n <= 500; ++n) {
      CHECK(sgn(rec_b[static_cast<std::size_t>(n)].get_den()) > 0);
      CHECK(sgn(rec_d[static_cast<std::size_t>(n)].get_den()) > 0);
    }
  }
}

TEST_CASE("stahl estimate") {
  CHECK(stahl_estimate_bouquet(1) == frac(1, 4));
  CHECK(stahl_estimate_bouquet(2) == frac(3, 2) - frac(25, 24));  // = 11/24
  CHECK(stahl_estimate_bouquet(2) == frac(11, 24));
  CHECK(avg_genus_bouquet_closed(1) - stahl_estimate_bouquet(1) == frac(-1, 4));
}

TEST_CASE("dipole summand and partial sums") {
  CHECK(dipole_summand(4) == Rational(1));        // 24 / 24
  CHECK(dipole_summand(5) == frac(-1, 3));        // -40 / 120
  CHECK(dipole_summand(6) == frac(1, 4));         // 90 / 360
  CHECK_THROWS_AS(dipole_summand(3), std::invalid_argument);
  CHECK(partial_sum_d2(3) == Rational(1));
  CHECK(partial_sum_d2(4) == frac(2, 3));
  CHECK(partial_sum_d2(6) == frac(4, 5));
  SUBCASE("n |S(n) - 1 + 1/n| decreases along the ladder") {
    Rational previous(-1);
    for (long n : {100L, 1000L, 10000L}) {
      const Rational gap = Rational(n) * abs(partial_sum_d2(n) - 1 + frac(1, n));
      if (previous >= 0) {
        CHECK(gap < previous);
      }
      previous = gap;
    }
  }
}

TEST_CASE("asymptotic estimates") {
  CHECK(kEulerConstant == doctest::Approx(0.5772).epsilon(1e-4));
  CHECK(asymptotic_bouquet(1) == doctest::Approx(0.364818577269261).epsilon(1e-12));
  CHECK(asymptotic_bouquet(10) == doctest::Approx(3.713526030772238).epsilon(1e-12));
  CHECK(asymptotic_dipole(3) == doctest::Approx(0.6620860232151786).epsilon(1e-12));
  CHECK(asymptotic_dipole(1) == doctest::Approx(0.21139216754923357).epsilon(1e-12));
}

TEST_CASE("difference report") {
  const DifferenceReport at4 = difference_report(4);
  CHECK(at4.limit == doctest::Approx(0.15342640972002736).epsilon(1e-15));
  CHECK(at4.difference == doctest::Approx(7.0 / 30.0).epsilon(1e-15));
  CHECK(avg_genus_bouquet_closed(4) - avg_genus_exact(Family::Dipole, 4) == frac(7, 30));
  CHECK_THROWS_AS(difference_report(2), std::invalid_argument);
}

TEST_CASE("residual ladders shrink") {
  double previous_b = 1e300;
  double previous_d = 1e300;
  double previous_s = 1e300;
  double previous_diff = 1e300;
  for (long n : {10L, 100L, 1000L}) {
    const double rb =
        std::abs(to_double(avg_genus_bouquet_closed(n)) - asymptotic_bouquet(n));
    const double rd =
        std::abs(to_double(avg_genus_dipole_closed(n)) - asymptotic_dipole(n));
    const double rs =
        std::abs(to_double(avg_genus_bouquet_closed(n) - stahl_estimate_bouquet(n)));
    const DifferenceReport diff = difference_report(n);
    const double rdiff = std::abs(diff.difference - diff.limit);
    CHECK(rb < previous_b);
    CHECK(rd < previous_d);
    CHECK(rs < previous_s);
    CHECK(rdiff < previous_diff);
    previous_b = rb;
    previous_d = rd;
    previous_s = rs;
    previous_diff = rdiff;
  }
}

TEST_CASE("average genus report") {
  const AvgGenusReport report = make_avg_genus_report(Family::Bouquet, 4, 30);
  CHECK(report.exact == frac(16, 15));
  CHECK(report.decimal == decimal_string(frac(16, 15), 30));
  CHECK(report.asymptotic_estimate == asymptotic_bouquet(4));
  CHECK(report.residual ==
        doctest::Approx(to_double(frac(16, 15)) - asymptotic_bouquet(4)).epsilon(1e-15));

  const AvgGenusReport tiny = make_avg_genus_report(Family::Dipole, 2, 10);
  CHECK(tiny.exact == Rational(0));
  CHECK(tiny.decimal == "0.0000000000");
}
