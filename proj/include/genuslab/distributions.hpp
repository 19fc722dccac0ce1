#pragma once

#include "genuslab/rational.hpp"

#include <string>
#include <vector>

namespace genuslab {

enum class Family { Bouquet, Dipole };

const char* family_name(Family family);
Family parse_family(const std::string& name);

// Maximum genus of an upper-embeddable family member: floor(n/2) for the
// bouquet B_n, floor((n-1)/2) for the dipole D_n.
int max_genus(Family family, int n);

// Total number of labeled oriented embeddings: (2n-1)! for B_n, ((n-1)!)^2
// for D_n (first dart pinned at each vertex).
BigInt embedding_count(Family family, int n);

// Exact genus distribution of one family member. coeffs[k] counts the
// embeddings of genus k; the vector always has length max_genus + 1.
struct GenusDistribution {
  Family family;
  int n;
  std::vector<BigInt> coeffs;
};

// Distributions via the integer recurrences, seeded from the n = 1, 2
// polynomials. Every division along the way must be exact; an inexact step
// throws std::logic_error since it can only mean an implementation bug.
GenusDistribution bouquet_distribution(int n);
GenusDistribution dipole_distribution(int n);

// Average genus derived from the distribution recurrences for every
// 1 <= n <= n_max, computed with two rolling coefficient rows. Entry [0]
// is 0 so callers can index by n.
std::vector<Rational> average_genus_distribution_table(Family family, int n_max);

// Sum of the coefficients; throws std::logic_error if it disagrees with
// embedding_count (the recurrence tripwire).
BigInt distribution_total(const GenusDistribution& dist);

// (sum k * g_k) / (sum g_k) in lowest terms.
Rational average_genus(const GenusDistribution& dist);

// Exact evaluation of the genus polynomial sum g_k x^k.
Rational genus_polynomial_eval(const GenusDistribution& dist, const Rational& x);

}  // namespace genuslab
