#pragma once

#include "genuslab/closedform.hpp"
#include "genuslab/distributions.hpp"

#include <optional>
#include <string>
#include <vector>

namespace genuslab {

// One machine-readable output row. Exact values travel as decimal strings
// ("p/q" for rationals), never as floats; the binary64 columns are the
// asymptotic estimate and its residual only.
struct ReportRow {
  Family family = Family::Bouquet;
  long n = 0;
  std::optional<std::vector<std::string>> distribution;
  std::optional<std::string> total;
  std::string avg_exact;
  std::optional<std::string> avg_decimal;
  std::optional<double> estimate;
  std::optional<double> residual;
  std::optional<bool> methods_agree;
  std::optional<std::string> skipped;
};

ReportRow make_dist_row(const GenusDistribution& dist);
ReportRow make_avg_row(Family family, long n, const Rational& exact, int precision);

// Compact JSON object with keys in fixed order; absent optionals are
// omitted, so re-serializing the parsed object reproduces the bytes.
std::string row_to_json(const ReportRow& row);

// Comma-separated row; the distribution cell packs coefficients with ';'.
std::string row_to_csv(const ReportRow& row);

// Convergence report row for the asymptotic ladder. Columns that are not
// defined at a given n stay absent: the Stahl estimate exists for bouquets
// only, the family difference needs n >= 3, and the ratio to the maximum
// genus needs a positive maximum.
struct AsymRow {
  Family family = Family::Bouquet;
  long n = 0;
  double estimate_residual = 0.0;
  std::optional<double> stahl_residual;
  std::optional<double> diff_residual;
  std::optional<double> ratio_to_max;
};

AsymRow make_asym_row(Family family, long n);
std::string asym_row_to_json(const AsymRow& row);
std::string asym_row_to_csv(const AsymRow& row);

// Shortest round-trip decimal rendering of a binary64 (what the JSON rows
// use for their float fields).
std::string double_string(double value);

}  // namespace genuslab
