#include "genuslab/closedform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace genuslab {

namespace {

void require_min_n(long n, long min_n, const char* what) {
  if (n < min_n) {
    throw std::invalid_argument(std::string(what) + " requires n >= " +
                                std::to_string(min_n));
  }
}

// Numerator polynomial of the dipole summand, alternating in m.
long dipole_summand_numerator(long m) {
  const long sign = (m % 2 == 0) ? 1 : -1;
  return sign * (4 * m * m - 12 * m + 6) + m * m - 5 * m + 6;
}

}  // namespace

Rational harmonic(long n) {
  if (n < 0) {
    throw std::invalid_argument("harmonic requires n >= 0");
  }
  Rational sum(0);
  for (long k = 1; k <= n; ++k) {
    sum += frac(1, k);
  }
  return sum;
}

Rational avg_genus_bouquet_closed(long n) {
  require_min_n(n, 1, "avg_genus_bouquet_closed");
  // Odd m contribute nothing: 1 + (-1)^m vanishes.
  Rational sum(0);
  for (long m = 0; m < n; m += 2) {
    sum += frac(1, m + 1);
  }
  Rational value = frac(n + 1, 2) - sum;
  if (n % 2 == 0) {
    value -= frac(1, 2 * (n + 1));
  }
  return value;
}

Rational dipole_summand(long m) {
  if (m < 4) {
    throw std::invalid_argument("dipole_summand requires m >= 4");
  }
  const BigInt den = BigInt(m - 3) * (m - 2) * (m - 1) * m;
  return frac(BigInt(dipole_summand_numerator(m)), den);
}

Rational avg_genus_dipole_closed(long n) {
  require_min_n(n, 3, "avg_genus_dipole_closed");
  Rational sum(0);
  for (long m = 4; m <= n + 1; ++m) {
    sum += dipole_summand(m) * frac(n - m + 2, 2);
  }
  return sum;
}

Rational partial_sum_d2(long n) {
  require_min_n(n, 3, "partial_sum_d2");
  Rational sum(0);
  for (long m = 4; m <= n + 1; ++m) {
    sum += dipole_summand(m);
  }
  return sum;
}

std::vector<Rational> avg_genus_bouquet_table(long n_max) {
  require_min_n(n_max, 1, "avg_genus_bouquet_table");
  std::vector<Rational> table(static_cast<std::size_t>(n_max) + 1, Rational(0));
  // a_n = 2/(n+1) a_{n-1} + (n-1)/(n+1) (a_{n-2} + 1), a_k = 0 for k <= 0.
  for (long n = 1; n <= n_max; ++n) {
    const Rational& prev = table[static_cast<std::size_t>(n - 1)];
    const Rational prev2 = n >= 2 ? table[static_cast<std::size_t>(n - 2)] : Rational(0);
    table[static_cast<std::size_t>(n)] =
        frac(2, n + 1) * prev + frac(n - 1, n + 1) * (prev2 + 1);
  }
  return table;
}

std::vector<Rational> avg_genus_dipole_table(long n_max) {
  require_min_n(n_max, 1, "avg_genus_dipole_table");
  std::vector<Rational> table(static_cast<std::size_t>(n_max) + 1, Rational(0));
  // p(p+2) a_{p+1} = (2p+1) a_p + (p^2-1) a_{p-1} + p^2, a_1 = a_2 = 0.
  for (long p = 2; p < n_max; ++p) {
    const Rational& prev = table[static_cast<std::size_t>(p)];
    const Rational& prev2 = table[static_cast<std::size_t>(p - 1)];
    table[static_cast<std::size_t>(p + 1)] =
        (Rational(2 * p + 1) * prev + Rational(p * p - 1) * prev2 + Rational(p * p)) /
        Rational(p * (p + 2));
  }
  return table;
}

Rational avg_genus_bouquet_recurrence(long n) {
  require_min_n(n, 1, "avg_genus_bouquet_recurrence");
  return avg_genus_bouquet_table(n)[static_cast<std::size_t>(n)];
}

Rational avg_genus_dipole_recurrence(long n) {
  require_min_n(n, 1, "avg_genus_dipole_recurrence");
  return avg_genus_dipole_table(n)[static_cast<std::size_t>(n)];
}

std::vector<Rational> avg_genus_bouquet_closed_table(long n_max) {
  require_min_n(n_max, 1, "avg_genus_bouquet_closed_table");
  std::vector<Rational> table(static_cast<std::size_t>(n_max) + 1, Rational(0));
  Rational sum(0);  // sum_{m=0}^{n-1} (1+(-1)^m)/(2(m+1)), grown incrementally
  for (long n = 1; n <= n_max; ++n) {
    if ((n - 1) % 2 == 0) {
      sum += frac(1, n);
    }
    Rational value = frac(n + 1, 2) - sum;
    if (n % 2 == 0) {
      value -= frac(1, 2 * (n + 1));
    }
    table[static_cast<std::size_t>(n)] = value;
  }
  return table;
}

std::vector<Rational> avg_genus_dipole_closed_table(long n_max) {
  require_min_n(n_max, 1, "avg_genus_dipole_closed_table");
  std::vector<Rational> table(static_cast<std::size_t>(n_max) + 1, Rational(0));
  // Split the (n-m+2)/2 weight into n * s(m)/2 + (2-m) s(m)/2 so that both
  // inner sums are prefix sums over m alone.
  Rational plain(0);     // sum of s(m)/2
  Rational weighted(0);  // sum of (2-m) s(m)/2
  for (long n = 3; n <= n_max; ++n) {
    const Rational term = dipole_summand(n + 1) / 2;
    plain += term;
    weighted += Rational(2 - (n + 1)) * term;
    table[static_cast<std::size_t>(n)] = Rational(n) * plain + weighted;
  }
  return table;
}

Rational avg_genus_exact(Family family, long n) {
  require_min_n(n, 1, "avg_genus_exact");
  if (family == Family::Bouquet) {
    return avg_genus_bouquet_closed(n);
  }
  return n < 3 ? Rational(0) : avg_genus_dipole_closed(n);
}

Rational stahl_estimate_bouquet(long n) {
  require_min_n(n, 1, "stahl_estimate_bouquet");
  return frac(n + 1, 2) - harmonic(2 * n) / 2;
}

double asymptotic_bouquet(long n) {
  require_min_n(n, 1, "asymptotic_bouquet");
  const double x = static_cast<double>(n);
  return (x - std::log(x) - kEulerConstant + 1.0 - std::numbers::ln2) / 2.0;
}

double asymptotic_dipole(long n) {
  require_min_n(n, 1, "asymptotic_dipole");
  const double x = static_cast<double>(n);
  return (x - std::log(x) - kEulerConstant) / 2.0;
}

DifferenceReport difference_report(long n) {
  require_min_n(n, 3, "difference_report");
  const Rational diff = avg_genus_exact(Family::Bouquet, n) - avg_genus_exact(Family::Dipole, n);
  return {to_double(diff), (1.0 - std::numbers::ln2) / 2.0};
}

AvgGenusReport make_avg_genus_report(Family family, long n, int precision) {
  AvgGenusReport report;
  report.family = family;
  report.n = n;
  report.exact = avg_genus_exact(family, n);
  report.decimal = decimal_string(report.exact, precision);
  report.asymptotic_estimate =
      family == Family::Bouquet ? asymptotic_bouquet(n) : asymptotic_dipole(n);
  report.residual = to_double(report.exact) - report.asymptotic_estimate;
  return report;
}

}  // namespace genuslab
