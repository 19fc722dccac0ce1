#include "genuslab/distributions.hpp"

#include <stdexcept>
#include <utility>

namespace genuslab {

namespace {

void require_positive_n(int n, const char* what) {
  if (n < 1) {
    throw std::invalid_argument(std::string(what) + " requires n >= 1");
  }
}

// Exact division by a small positive integer; remainder must be zero.
void divide_exact(BigInt& value, unsigned long divisor, int n, int genus) {
  if (!mpz_divisible_ui_p(value.get_mpz_t(), divisor)) {
    throw std::logic_error("inexact division in genus recurrence at n=" +
                           std::to_string(n) + ", genus " + std::to_string(genus));
  }
  mpz_divexact_ui(value.get_mpz_t(), value.get_mpz_t(), divisor);
}

BigInt coeff_or_zero(const std::vector<BigInt>& coeffs, int k) {
  if (k < 0 || k >= static_cast<int>(coeffs.size())) {
    return BigInt(0);
  }
  return coeffs[static_cast<std::size_t>(k)];
}

}  // namespace

const char* family_name(Family family) {
  return family == Family::Bouquet ? "bouquet" : "dipole";
}

Family parse_family(const std::string& name) {
  if (name == "bouquet") return Family::Bouquet;
  if (name == "dipole") return Family::Dipole;
  throw std::invalid_argument("unknown family '" + name + "' (expected bouquet or dipole)");
}

int max_genus(Family family, int n) {
  require_positive_n(n, "max_genus");
  return family == Family::Bouquet ? n / 2 : (n - 1) / 2;
}

BigInt embedding_count(Family family, int n) {
  require_positive_n(n, "embedding_count");
  if (family == Family::Bouquet) {
    return factorial(static_cast<unsigned long>(2 * n - 1));
  }
  const BigInt half = factorial(static_cast<unsigned long>(n - 1));
  return half * half;
}

namespace {

// One recurrence step: replaces (two_back, one_back) = (B_{k-2}, B_{k-1})
// with (B_{k-1}, B_k).
void bouquet_step(int k, std::vector<BigInt>& two_back, std::vector<BigInt>& one_back) {
  const BigInt loop_weight =
      BigInt(4) * (2 * k - 1) * (2 * k - 3) * (k - 1) * (k - 1) * (k - 2);
  const BigInt merge_weight = BigInt(4) * (2 * k - 1) * (k - 1);
  std::vector<BigInt> current(static_cast<std::size_t>(k / 2 + 1));
  for (int m = 0; m < static_cast<int>(current.size()); ++m) {
    BigInt acc = loop_weight * coeff_or_zero(two_back, m - 1);
    acc += merge_weight * coeff_or_zero(one_back, m);
    divide_exact(acc, static_cast<unsigned long>(k + 1), k, m);
    current[static_cast<std::size_t>(m)] = std::move(acc);
  }
  two_back = std::move(one_back);
  one_back = std::move(current);
}

// Same for dipoles: step p computes D_{p+1} from D_p and D_{p-1}. The
// subtraction makes intermediate values signed, but every final count must
// be nonnegative.
void dipole_step(int p, std::vector<BigInt>& two_back, std::vector<BigInt>& one_back) {
  const BigInt square = BigInt(p - 1) * (p - 1);
  const BigInt keep_weight = BigInt(p) * (2 * p + 1);
  const BigInt raise_weight = BigInt(p) * p * p * square;
  const BigInt drop_weight = BigInt(p) * square;
  std::vector<BigInt> current(static_cast<std::size_t>(p / 2 + 1));
  for (int k = 0; k < static_cast<int>(current.size()); ++k) {
    BigInt acc = keep_weight * coeff_or_zero(one_back, k);
    acc += raise_weight * coeff_or_zero(two_back, k - 1);
    acc -= drop_weight * coeff_or_zero(two_back, k);
    if (sgn(acc) < 0) {
      throw std::logic_error("negative coefficient in dipole recurrence at n=" +
                             std::to_string(p + 1) + ", genus " + std::to_string(k));
    }
    divide_exact(acc, static_cast<unsigned long>(p + 2), p + 1, k);
    current[static_cast<std::size_t>(k)] = std::move(acc);
  }
  two_back = std::move(one_back);
  one_back = std::move(current);
}

Rational average_of(const std::vector<BigInt>& coeffs) {
  BigInt weighted(0);
  BigInt total(0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    weighted += BigInt(static_cast<unsigned long>(k)) * coeffs[k];
    total += coeffs[k];
  }
  return frac(weighted, total);
}

}  // namespace

GenusDistribution bouquet_distribution(int n) {
  require_positive_n(n, "bouquet_distribution");
  std::vector<BigInt> two_back{1};      // n = 1
  std::vector<BigInt> one_back{4, 2};   // n = 2
  if (n == 1) return {Family::Bouquet, 1, std::move(two_back)};
  for (int k = 3; k <= n; ++k) {
    bouquet_step(k, two_back, one_back);
  }
  return {Family::Bouquet, n, std::move(one_back)};
}

GenusDistribution dipole_distribution(int n) {
  require_positive_n(n, "dipole_distribution");
  std::vector<BigInt> two_back{1};  // n = 1
  std::vector<BigInt> one_back{1};  // n = 2
  if (n == 1) return {Family::Dipole, 1, std::move(two_back)};
  for (int p = 2; p < n; ++p) {
    dipole_step(p, two_back, one_back);
  }
  return {Family::Dipole, n, std::move(one_back)};
}

std::vector<Rational> average_genus_distribution_table(Family family, int n_max) {
  require_positive_n(n_max, "average_genus_distribution_table");
  std::vector<Rational> table(static_cast<std::size_t>(n_max) + 1, Rational(0));
  std::vector<BigInt> two_back{1};
  std::vector<BigInt> one_back =
      family == Family::Bouquet ? std::vector<BigInt>{4, 2} : std::vector<BigInt>{1};
  table[1] = average_of(two_back);
  if (n_max >= 2) {
    table[2] = average_of(one_back);
  }
  for (int n = 3; n <= n_max; ++n) {
    if (family == Family::Bouquet) {
      bouquet_step(n, two_back, one_back);
    } else {
      dipole_step(n - 1, two_back, one_back);
    }
    table[static_cast<std::size_t>(n)] = average_of(one_back);
  }
  return table;
}

BigInt distribution_total(const GenusDistribution& dist) {
  BigInt total(0);
  for (const BigInt& coeff : dist.coeffs) {
    total += coeff;
  }
  if (total != embedding_count(dist.family, dist.n)) {
    throw std::logic_error(std::string("distribution total mismatch for ") +
                           family_name(dist.family) + " n=" + std::to_string(dist.n));
  }
  return total;
}

Rational average_genus(const GenusDistribution& dist) { return average_of(dist.coeffs); }

Rational genus_polynomial_eval(const GenusDistribution& dist, const Rational& x) {
  Rational value(0);
  for (std::size_t k = dist.coeffs.size(); k-- > 0;) {
    value = value * x + Rational(dist.coeffs[k]);
  }
  return value;
}

}  // namespace genuslab
