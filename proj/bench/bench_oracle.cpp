// Wall-clock comparison of the serial reference enumeration against the
// OpenMP kernel at several thread counts. The censuses must agree bit for
// bit; the benchmark aborts if they do not.

#include "genuslab/oracle.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using namespace genuslab;

double seconds_since(std::chrono::steady_clock::time_point start) {
  const auto elapsed = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double>(elapsed).count();
}

void bench_case(Family family, int n) {
  const auto serial_start = std::chrono::steady_clock::now();
  const EmbeddingCensus baseline = oracle_distribution_serial(family, n);
  const double serial_time = seconds_since(serial_start);
  const double traces = baseline.total.get_d();
  std::cout << family_name(family) << " n=" << n << " traces=" << traces << '\n';
  std::cout << "  serial reference: " << serial_time << " s ("
            << traces / serial_time << " traces/s)\n";

  for (int threads : {1, 2, 4, 8}) {
    const auto start = std::chrono::steady_clock::now();
    const EmbeddingCensus census = oracle_distribution(family, n, threads);
    const double elapsed = seconds_since(start);
    if (census.to_string() != baseline.to_string()) {
      std::cerr << "MISMATCH against serial reference at threads=" << threads << '\n';
      std::exit(1);
    }
    std::cout << "  openmp threads=" << threads << ": " << elapsed << " s ("
              << traces / elapsed << " traces/s, speedup " << serial_time / elapsed
              << ")\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  int bouquet_n = 5;
  int dipole_n = 7;
  if (argc > 1) bouquet_n = std::atoi(argv[1]);
  if (argc > 2) dipole_n = std::atoi(argv[2]);
  std::cout << "hardware threads: " << omp_get_max_threads() << '\n';
  bench_case(Family::Bouquet, bouquet_n);
  bench_case(Family::Dipole, dipole_n);
  return 0;
}
