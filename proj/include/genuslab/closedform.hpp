#pragma once

#include "genuslab/distributions.hpp"
#include "genuslab/rational.hpp"

#include <string>
#include <vector>

namespace genuslab {

// binary64 Euler-Mascheroni constant shared by all asymptotic estimates.
inline constexpr double kEulerConstant = 0.5772156649015329;

// H_n = sum_{k=1}^{n} 1/k, H_0 = 0.
Rational harmonic(long n);

// Exact average genus of B_n:
//   (n+1)/2 - sum_{m=0}^{n-1} (1+(-1)^m)/(2(m+1)) - (1+(-1)^n)/(4(n+1)).
Rational avg_genus_bouquet_closed(long n);

// Exact average genus of D_n for n >= 3 as the explicit alternating sum;
// smaller n are rejected (the values for n in {1, 2} are the constant 0).
Rational avg_genus_dipole_closed(long n);

// Summand of the dipole sum without its (n-m+2)/2 weight, defined for m >= 4:
//   (4(-1)^m m^2 + m^2 - 12(-1)^m m - 5m + 6(-1)^m + 6) / ((m-3)(m-2)(m-1)m).
Rational dipole_summand(long m);

// Partial sums S(n) = sum_{m=4}^{n+1} dipole_summand(m), which approach
// 1 - 1/n. Defined for n >= 3.
Rational partial_sum_d2(long n);

// Prefix tables of the average-genus recurrences. Entry [n] holds the value
// for 1 <= n <= n_max; entry [0] is 0 so callers can index directly.
std::vector<Rational> avg_genus_bouquet_table(long n_max);
std::vector<Rational> avg_genus_dipole_table(long n_max);

Rational avg_genus_bouquet_recurrence(long n);
Rational avg_genus_dipole_recurrence(long n);

// Closed forms evaluated for every 1 <= n <= n_max in one O(n_max) sweep by
// sharing the inner partial sums; entry [n] equals the scalar closed form.
std::vector<Rational> avg_genus_bouquet_closed_table(long n_max);
std::vector<Rational> avg_genus_dipole_closed_table(long n_max);

// Average genus for any n >= 1 via the closed forms (dipole n in {1, 2}
// use the stated constants).
Rational avg_genus_exact(Family family, long n);

// Stahl's harmonic-number estimate (n+1)/2 - H_{2n}/2, exact.
Rational stahl_estimate_bouquet(long n);

// binary64 asymptotic estimates (n - ln n - c + 1 - ln 2)/2 and
// (n - ln n - c)/2.
double asymptotic_bouquet(long n);
double asymptotic_dipole(long n);

// Exact difference avg(B_n) - avg(D_n) rendered to binary64, next to its
// limit (1 - ln 2)/2.
struct DifferenceReport {
  double difference;
  double limit;
};
DifferenceReport difference_report(long n);

struct AvgGenusReport {
  Family family;
  long n;
  Rational exact;
  std::string decimal;           // decimal_string(exact, precision)
  double asymptotic_estimate;
  double residual;               // binary64(exact) - estimate
};
AvgGenusReport make_avg_genus_report(Family family, long n, int precision);

}  // namespace genuslab
