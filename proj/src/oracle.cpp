#include "genuslab/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace genuslab {

namespace {

// Visited set is a single machine word; plenty for every enumerable size.
constexpr int kMaxDarts = 64;

constexpr int kBouquetCeiling = 6;  // 11! traces at n = 6
constexpr int kDipoleCeiling = 8;   // (7!)^2 traces at n = 8

using Histogram = std::vector<std::uint64_t>;

int env_ceiling() {
  const char* raw = std::getenv("GENUSLAB_ORACLE_CEILING");
  if (raw == nullptr || *raw == '\0') {
    return 0;
  }
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1) {
    throw std::invalid_argument("GENUSLAB_ORACLE_CEILING must be a positive integer");
  }
  return static_cast<int>(value);
}

void check_enumerable(Family family, int n) {
  if (n < 1) {
    throw std::invalid_argument("oracle census requires n >= 1");
  }
  const int ceiling = oracle_ceiling(family);
  if (n > ceiling) {
    throw std::invalid_argument(
        std::string(family_name(family)) + " oracle census is capped at n=" +
        std::to_string(ceiling) + "; set GENUSLAB_ORACLE_CEILING to raise it");
  }
  if (2 * n > kMaxDarts) {
    throw std::invalid_argument("oracle census supports at most 64 darts");
  }
}

// Cycles of sigma∘alpha with the dense pairing alpha(d) = d ^ 1.
int count_faces_paired(const int* successor, int dart_count) {
  std::uint64_t visited = 0;
  int faces = 0;
  for (int d = 0; d < dart_count; ++d) {
    if (visited >> d & 1) {
      continue;
    }
    ++faces;
    int e = d;
    do {
      visited |= std::uint64_t{1} << e;
      e = successor[e ^ 1];
    } while (e != d);
  }
  return faces;
}

void bin_genus(int vertices, int edges, int faces, Histogram& hist) {
  const int genus = genus_from_faces(vertices, edges, faces);
  if (genus >= static_cast<int>(hist.size())) {
    throw std::logic_error("traced embedding exceeds the family's maximum genus");
  }
  ++hist[static_cast<std::size_t>(genus)];
}

// All bouquet rotations reachable by permuting rest[fixed_prefix..] in
// place (dart 0 stays pinned in first position). rest must arrive with the
// permuted suffix in ascending order.
void sweep_bouquet(int n, std::vector<int>& rest, std::size_t fixed_prefix,
                   Histogram& hist) {
  const int dart_count = 2 * n;
  std::array<int, kMaxDarts> successor{};
  do {
    successor[0] = rest.front();
    for (std::size_t i = 0; i + 1 < rest.size(); ++i) {
      successor[static_cast<std::size_t>(rest[i])] = rest[i + 1];
    }
    successor[static_cast<std::size_t>(rest.back())] = 0;
    bin_genus(1, n, count_faces_paired(successor.data(), dart_count), hist);
  } while (std::next_permutation(rest.begin() + static_cast<std::ptrdiff_t>(fixed_prefix),
                                 rest.end()));
}

// Dipole darts: evens at the first vertex, odds at the second, so the edge
// pairing stays d ^ 1. Darts 0 and 1 are pinned; the inner sweep runs the
// full second-vertex range for every outer arrangement.
void sweep_dipole(int n, std::vector<int>& u_rest, std::size_t fixed_prefix,
                  Histogram& hist) {
  const int dart_count = 2 * n;
  std::vector<int> v_rest;
  for (int d = 3; d < dart_count; d += 2) {
    v_rest.push_back(d);
  }
  std::array<int, kMaxDarts> successor{};
  auto fill_vertex = [&successor](int pinned, const std::vector<int>& rest) {
    if (rest.empty()) {
      successor[static_cast<std::size_t>(pinned)] = pinned;
      return;
    }
    successor[static_cast<std::size_t>(pinned)] = rest.front();
    for (std::size_t i = 0; i + 1 < rest.size(); ++i) {
      successor[static_cast<std::size_t>(rest[i])] = rest[i + 1];
    }
    successor[static_cast<std::size_t>(rest.back())] = pinned;
  };
  do {
    fill_vertex(0, u_rest);
    do {
      fill_vertex(1, v_rest);
      bin_genus(2, n, count_faces_paired(successor.data(), dart_count), hist);
    } while (std::next_permutation(v_rest.begin(), v_rest.end()));
  } while (std::next_permutation(u_rest.begin() + static_cast<std::ptrdiff_t>(fixed_prefix),
                                 u_rest.end()));
}

void sweep_shard(Family family, int n, std::vector<int>& rest, std::size_t fixed_prefix,
                 Histogram& hist) {
  if (family == Family::Bouquet) {
    sweep_bouquet(n, rest, fixed_prefix, hist);
  } else {
    sweep_dipole(n, rest, fixed_prefix, hist);
  }
}

// Free darts of the first vertex, the sharding axis of the parallel kernel.
std::vector<int> first_vertex_free_darts(Family family, int n) {
  std::vector<int> free_darts;
  if (family == Family::Bouquet) {
    for (int d = 1; d < 2 * n; ++d) {
      free_darts.push_back(d);
    }
  } else {
    for (int d = 2; d < 2 * n; d += 2) {
      free_darts.push_back(d);
    }
  }
  return free_darts;
}

EmbeddingCensus make_census(Family family, int n, const Histogram& hist) {
  EmbeddingCensus census{family, n, {}, BigInt(0)};
  census.counts.reserve(hist.size());
  for (std::uint64_t count : hist) {
    census.counts.emplace_back(static_cast<unsigned long>(count));
    census.total += census.counts.back();
  }
  if (census.total != embedding_count(family, n)) {
    throw std::logic_error(std::string("oracle census total mismatch for ") +
                           family_name(family) + " n=" + std::to_string(n));
  }
  return census;
}

}  // namespace

int trace_faces(const RotationSystem& rotation) {
  const int dart_count = static_cast<int>(rotation.edge_involution.size());
  if (dart_count <= 0 || dart_count % 2 != 0) {
    throw std::invalid_argument("rotation system needs a positive even dart count");
  }
  std::vector<int> successor(static_cast<std::size_t>(dart_count), -1);
  std::vector<int> seen(static_cast<std::size_t>(dart_count), 0);
  for (const auto& rotation_cycle : rotation.vertex_rotations) {
    for (std::size_t i = 0; i < rotation_cycle.size(); ++i) {
      const int dart = rotation_cycle[i];
      if (dart < 0 || dart >= dart_count) {
        throw std::invalid_argument("dart out of range in vertex rotation");
      }
      if (seen[static_cast<std::size_t>(dart)]++ != 0) {
        throw std::invalid_argument("dart appears twice in vertex rotations");
      }
      successor[static_cast<std::size_t>(dart)] =
          rotation_cycle[(i + 1) % rotation_cycle.size()];
    }
  }
  for (int d = 0; d < dart_count; ++d) {
    if (seen[static_cast<std::size_t>(d)] == 0) {
      throw std::invalid_argument("dart missing from vertex rotations");
    }
  }
  const auto& alpha = rotation.edge_involution;
  for (int d = 0; d < dart_count; ++d) {
    const int paired = alpha[static_cast<std::size_t>(d)];
    if (paired < 0 || paired >= dart_count || paired == d ||
        alpha[static_cast<std::size_t>(paired)] != d) {
      throw std::invalid_argument("edge involution must be a fixed-point-free involution");
    }
  }

  std::vector<char> visited(static_cast<std::size_t>(dart_count), 0);
  int faces = 0;
  for (int d = 0; d < dart_count; ++d) {
    if (visited[static_cast<std::size_t>(d)]) {
      continue;
    }
    ++faces;
    int e = d;
    do {
      visited[static_cast<std::size_t>(e)] = 1;
      e = successor[static_cast<std::size_t>(alpha[static_cast<std::size_t>(e)])];
    } while (e != d);
  }
  return faces;
}

int genus_from_faces(int vertices, int edges, int faces) {
  const int doubled = 2 - vertices + edges - faces;
  if (doubled < 0 || doubled % 2 != 0) {
    throw std::invalid_argument("V=" + std::to_string(vertices) + " E=" +
                                std::to_string(edges) + " F=" + std::to_string(faces) +
                                " is not an oriented embedding");
  }
  return doubled / 2;
}

std::string EmbeddingCensus::to_string() const {
  std::ostringstream out;
  out << family_name(family) << " n=" << n << " total=" << total.get_str()
      << " counts=[";
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (k > 0) {
      out << ',';
    }
    out << counts[k].get_str();
  }
  out << ']';
  return out.str();
}

int oracle_ceiling(Family family) {
  const int override_value = env_ceiling();
  if (override_value > 0) {
    return override_value;
  }
  return family == Family::Bouquet ? kBouquetCeiling : kDipoleCeiling;
}

EmbeddingCensus oracle_distribution(Family family, int n, int parallelism) {
  check_enumerable(family, n);
  if (parallelism < 1) {
    throw std::invalid_argument("parallelism must be >= 1");
  }
  const int genus_slots = max_genus(family, n) + 1;
  const std::vector<int> free_darts = first_vertex_free_darts(family, n);

  // One shard per choice of the dart following the pinned dart; a vertex
  // with no free darts yields the single trivial shard.
  std::vector<std::vector<int>> shard_rest;
  std::vector<std::size_t> shard_prefix;
  if (free_darts.empty()) {
    shard_rest.emplace_back();
    shard_prefix.push_back(0);
  } else {
    for (std::size_t s = 0; s < free_darts.size(); ++s) {
      std::vector<int> rest;
      rest.push_back(free_darts[s]);
      for (std::size_t i = 0; i < free_darts.size(); ++i) {
        if (i != s) {
          rest.push_back(free_darts[i]);
        }
      }
      shard_rest.push_back(std::move(rest));
      shard_prefix.push_back(1);
    }
  }

  const int shard_count = static_cast<int>(shard_rest.size());
  std::vector<Histogram> shard_hist(static_cast<std::size_t>(shard_count));
  std::vector<std::string> shard_error(static_cast<std::size_t>(shard_count));
#pragma omp parallel for schedule(dynamic, 1) num_threads(parallelism)
  for (int s = 0; s < shard_count; ++s) {
    try {
      Histogram hist(static_cast<std::size_t>(genus_slots), 0);
      sweep_shard(family, n, shard_rest[static_cast<std::size_t>(s)],
                  shard_prefix[static_cast<std::size_t>(s)], hist);
      shard_hist[static_cast<std::size_t>(s)] = std::move(hist);
    } catch (const std::exception& error) {
      shard_error[static_cast<std::size_t>(s)] = error.what();
    }
  }
  for (const std::string& error : shard_error) {
    if (!error.empty()) {
      throw std::logic_error("oracle shard failed: " + error);
    }
  }

  // Elementwise addition in shard order keeps the census byte-identical for
  // every thread count.
  Histogram merged(static_cast<std::size_t>(genus_slots), 0);
  for (const Histogram& hist : shard_hist) {
    for (std::size_t k = 0; k < merged.size(); ++k) {
      merged[k] += hist[k];
    }
  }
  return make_census(family, n, merged);
}

EmbeddingCensus oracle_distribution_serial(Family family, int n) {
  check_enumerable(family, n);
  Histogram hist(static_cast<std::size_t>(max_genus(family, n) + 1), 0);
  std::vector<int> rest = first_vertex_free_darts(family, n);
  sweep_shard(family, n, rest, 0, hist);
  return make_census(family, n, hist);
}

}  // namespace genuslab
