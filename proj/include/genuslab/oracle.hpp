#pragma once

#include "genuslab/distributions.hpp"
#include "genuslab/rational.hpp"

#include <string>
#include <vector>

namespace genuslab {

// One oriented cellular embedding: a cyclic dart order per vertex plus the
// fixed-point-free involution pairing the two darts of every edge.
struct RotationSystem {
  std::vector<std::vector<int>> vertex_rotations;
  std::vector<int> edge_involution;
};

// Validates the system and returns the number of faces: the cycle count of
// sigma∘alpha, where sigma maps a dart to the next dart in its vertex's
// rotation. Malformed systems (duplicate/missing darts, bad involution) are
// rejected with std::invalid_argument.
int trace_faces(const RotationSystem& rotation);

// Euler-formula genus (2 - V + E - F) / 2; odd or negative values mean the
// triple does not come from an oriented embedding and are rejected.
int genus_from_faces(int vertices, int edges, int faces);

// Genus histogram of an exhaustive embedding enumeration.
struct EmbeddingCensus {
  Family family;
  int n;
  std::vector<BigInt> counts;  // by genus, length max_genus + 1
  BigInt total;

  // Canonical one-line rendering; determinism checks compare these bytes.
  std::string to_string() const;
};

// Default enumeration ceilings (bouquet n <= 6, dipole n <= 8, i.e. at most
// 11! resp. (7!)^2 traces). GENUSLAB_ORACLE_CEILING replaces both bounds.
int oracle_ceiling(Family family);

// Exhaustive census over all labeled embeddings, first dart of every vertex
// pinned in first rotation position. The kernel shards on the dart placed
// after the pinned dart at the first vertex and adds shard histograms in
// shard order, so the result is independent of the thread count.
EmbeddingCensus oracle_distribution(Family family, int n, int parallelism);

// Serial reference: a single next_permutation sweep with no sharding. Kept
// as the baseline the parallel kernel is checked and benchmarked against.
EmbeddingCensus oracle_distribution_serial(Family family, int n);

}  // namespace genuslab
