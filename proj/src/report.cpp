#include "genuslab/report.hpp"

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

namespace genuslab {

namespace {

using OrderedJson = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& cells, char separator) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) {
      out += separator;
    }
    out += cells[i];
  }
  return out;
}

}  // namespace

std::string double_string(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

ReportRow make_dist_row(const GenusDistribution& dist) {
  ReportRow row;
  row.family = dist.family;
  row.n = dist.n;
  std::vector<std::string> coeffs;
  coeffs.reserve(dist.coeffs.size());
  for (const BigInt& coeff : dist.coeffs) {
    coeffs.push_back(coeff.get_str());
  }
  row.distribution = std::move(coeffs);
  row.total = distribution_total(dist).get_str();
  row.avg_exact = fraction_string(average_genus(dist));
  return row;
}

ReportRow make_avg_row(Family family, long n, const Rational& exact, int precision) {
  ReportRow row;
  row.family = family;
  row.n = n;
  row.avg_exact = fraction_string(exact);
  row.avg_decimal = decimal_string(exact, precision);
  const double estimate =
      family == Family::Bouquet ? asymptotic_bouquet(n) : asymptotic_dipole(n);
  row.estimate = estimate;
  row.residual = to_double(exact) - estimate;
  return row;
}

std::string row_to_json(const ReportRow& row) {
  OrderedJson out;
  out["family"] = family_name(row.family);
  out["n"] = row.n;
  if (row.skipped) {
    out["skipped"] = *row.skipped;
    return out.dump();
  }
  if (row.distribution) {
    out["distribution"] = *row.distribution;
  }
  if (row.total) {
    out["total"] = *row.total;
  }
  out["avg_exact"] = row.avg_exact;
  if (row.avg_decimal) {
    out["avg_decimal"] = *row.avg_decimal;
  }
  if (row.estimate) {
    out["estimate"] = *row.estimate;
  }
  if (row.residual) {
    out["residual"] = *row.residual;
  }
  if (row.methods_agree) {
    out["methods_agree"] = *row.methods_agree;
  }
  return out.dump();
}

std::string row_to_csv(const ReportRow& row) {
  std::vector<std::string> cells{family_name(row.family), std::to_string(row.n)};
  if (row.skipped) {
    cells.push_back("skipped:" + *row.skipped);
    return join(cells, ',');
  }
  if (row.distribution) {
    cells.push_back(join(*row.distribution, ';'));
  }
  if (row.total) {
    cells.push_back(*row.total);
  }
  cells.push_back(row.avg_exact);
  if (row.avg_decimal) {
    cells.push_back(*row.avg_decimal);
  }
  if (row.estimate) {
    cells.push_back(double_string(*row.estimate));
  }
  if (row.residual) {
    cells.push_back(double_string(*row.residual));
  }
  if (row.methods_agree) {
    cells.push_back(*row.methods_agree ? "agree" : "disagree");
  }
  return join(cells, ',');
}

AsymRow make_asym_row(Family family, long n) {
  AsymRow row;
  row.family = family;
  row.n = n;
  const Rational exact = avg_genus_exact(family, n);
  const double estimate =
      family == Family::Bouquet ? asymptotic_bouquet(n) : asymptotic_dipole(n);
  row.estimate_residual = std::abs(to_double(exact) - estimate);
  if (family == Family::Bouquet) {
    row.stahl_residual = std::abs(to_double(exact - stahl_estimate_bouquet(n)));
  }
  if (n >= 3) {
    const DifferenceReport diff = difference_report(n);
    row.diff_residual = std::abs(diff.difference - diff.limit);
  }
  const int genus_cap = max_genus(family, static_cast<int>(n));
  if (genus_cap > 0) {
    row.ratio_to_max = to_double(exact) / static_cast<double>(genus_cap);
  }
  return row;
}

std::string asym_row_to_json(const AsymRow& row) {
  OrderedJson out;
  out["family"] = family_name(row.family);
  out["n"] = row.n;
  out["estimate_residual"] = row.estimate_residual;
  if (row.stahl_residual) {
    out["stahl_residual"] = *row.stahl_residual;
  }
  if (row.diff_residual) {
    out["diff_residual"] = *row.diff_residual;
  }
  if (row.ratio_to_max) {
    out["ratio_to_max"] = *row.ratio_to_max;
  }
  return out.dump();
}

std::string asym_row_to_csv(const AsymRow& row) {
  std::vector<std::string> cells{family_name(row.family), std::to_string(row.n),
                                 double_string(row.estimate_residual)};
  cells.push_back(row.stahl_residual ? double_string(*row.stahl_residual) : "");
  cells.push_back(row.diff_residual ? double_string(*row.diff_residual) : "");
  cells.push_back(row.ratio_to_max ? double_string(*row.ratio_to_max) : "");
  return join(cells, ',');
}

}  // namespace genuslab
