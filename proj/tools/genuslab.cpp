#include "CLI11.hpp"

#include "genuslab/closedform.hpp"
#include "genuslab/distributions.hpp"
#include "genuslab/oracle.hpp"
#include "genuslab/powerseries.hpp"
#include "genuslab/report.hpp"

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace genuslab;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

// Per-row averages through the full distribution recurrence stay snappy up
// to here; rows beyond it are reported as skipped and the run continues.
constexpr long kAvgDistributionCap = 500;

struct Options {
  std::string family = "bouquet";
  long n = 1;
  long n_max = 1;
  std::string format = "json";
  std::string method = "closed";
  int order = 100;
  int parallelism = 1;
  int precision = 30;
  std::vector<long> ladder{10, 100, 1000, 10000};
  bool cross_check = false;
  bool inject_fault = false;
};

void emit_row(const ReportRow& row, const std::string& format) {
  std::cout << (format == "csv" ? row_to_csv(row) : row_to_json(row)) << '\n';
}

int run_dist(const Options& opt) {
  const Family family = parse_family(opt.family);
  const int n = static_cast<int>(opt.n);
  const GenusDistribution dist =
      family == Family::Bouquet ? bouquet_distribution(n) : dipole_distribution(n);
  emit_row(make_dist_row(dist), opt.format);
  return kExitOk;
}

int run_avg(const Options& opt) {
  const Family family = parse_family(opt.family);
  const long n_max = opt.n_max;
  const long dist_cap = std::min(n_max, kAvgDistributionCap);

  std::vector<Rational> values;
  if (opt.method == "closed") {
    values = family == Family::Bouquet ? avg_genus_bouquet_closed_table(n_max)
                                       : avg_genus_dipole_closed_table(n_max);
  } else if (opt.method == "recurrence") {
    values = family == Family::Bouquet ? avg_genus_bouquet_table(n_max)
                                       : avg_genus_dipole_table(n_max);
  } else if (opt.method == "distribution") {
    values = average_genus_distribution_table(family, static_cast<int>(dist_cap));
  } else {
    throw std::invalid_argument("unknown method '" + opt.method +
                                "' (expected closed, recurrence or distribution)");
  }

  std::vector<Rational> check_closed;
  std::vector<Rational> check_recurrence;
  std::vector<Rational> check_distribution;
  if (opt.cross_check) {
    check_closed = family == Family::Bouquet ? avg_genus_bouquet_closed_table(n_max)
                                             : avg_genus_dipole_closed_table(n_max);
    check_recurrence = family == Family::Bouquet ? avg_genus_bouquet_table(n_max)
                                                 : avg_genus_dipole_table(n_max);
    check_distribution =
        average_genus_distribution_table(family, static_cast<int>(dist_cap));
  }

  bool all_agree = true;
  for (long n = 1; n <= n_max; ++n) {
    if (opt.method == "distribution" && n > dist_cap) {
      ReportRow row;
      row.family = family;
      row.n = n;
      row.skipped = "distribution method capped at n=" +
                    std::to_string(kAvgDistributionCap);
      emit_row(row, opt.format);
      continue;
    }
    ReportRow row =
        make_avg_row(family, n, values[static_cast<std::size_t>(n)], opt.precision);
    if (opt.cross_check) {
      const std::size_t i = static_cast<std::size_t>(n);
      bool agree = check_closed[i] == check_recurrence[i];
      if (n <= dist_cap) {
        agree = agree && check_closed[i] == check_distribution[i];
      }
      row.methods_agree = agree;
      all_agree = all_agree && agree;
    }
    emit_row(row, opt.format);
  }
  return all_agree ? kExitOk : kExitVerificationFailure;
}

int run_verify(const Options& opt) {
  const Family family = parse_family(opt.family);
  const int n_max = static_cast<int>(opt.n_max);
  const int ceiling = oracle_ceiling(family);
  if (n_max > ceiling) {
    throw std::invalid_argument(std::string(family_name(family)) +
                                " verification is capped at n=" + std::to_string(ceiling) +
                                "; set GENUSLAB_ORACLE_CEILING to raise it");
  }
  bool all_pass = true;
  for (int n = 1; n <= n_max; ++n) {
    GenusDistribution expected =
        family == Family::Bouquet ? bouquet_distribution(n) : dipole_distribution(n);
    if (opt.inject_fault && n == n_max) {
      expected.coeffs[0] += 1;
    }
    const EmbeddingCensus census = oracle_distribution(family, n, opt.parallelism);
    int mismatch = -1;
    for (std::size_t k = 0; k < expected.coeffs.size(); ++k) {
      if (expected.coeffs[k] != census.counts[k]) {
        mismatch = static_cast<int>(k);
        break;
      }
    }
    if (mismatch < 0) {
      std::cout << family_name(family) << " n=" << n << ": PASS\n";
    } else {
      all_pass = false;
      std::cout << family_name(family) << " n=" << n << ": FAIL at genus " << mismatch
                << " (recurrence=" << expected.coeffs[static_cast<std::size_t>(mismatch)].get_str()
                << ", oracle=" << census.counts[static_cast<std::size_t>(mismatch)].get_str()
                << ")\n";
    }
  }
  return all_pass ? kExitOk : kExitVerificationFailure;
}

int run_ode_check(const Options& opt) {
  const Family family = parse_family(opt.family);
  const TruncatedSeries residual = family == Family::Bouquet
                                       ? bouquet_ode_residual(opt.order)
                                       : dipole_ode_residual(opt.order);
  const auto bad = first_nonzero_exponent(residual);
  if (!bad) {
    std::cout << family_name(family) << " ode residual zero through order "
              << residual.order() - 1 << ": PASS\n";
    return kExitOk;
  }
  std::cout << family_name(family) << " ode residual nonzero at exponent " << *bad
            << " (" << fraction_string(residual.coeff(*bad)) << "): FAIL\n";
  return kExitVerificationFailure;
}

int run_asym(const Options& opt) {
  const Family family = parse_family(opt.family);
  if (opt.ladder.empty()) {
    throw std::invalid_argument("ladder must not be empty");
  }
  long previous = 0;
  for (long n : opt.ladder) {
    if (n < 1 || n <= previous) {
      throw std::invalid_argument("ladder values must be >= 1 and strictly ascending");
    }
    if (n > 100000) {
      throw std::invalid_argument("ladder values above 100000 are not supported");
    }
    previous = n;
  }
  for (long n : opt.ladder) {
    const AsymRow row = make_asym_row(family, n);
    std::cout << (opt.format == "csv" ? asym_row_to_csv(row) : asym_row_to_json(row))
              << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact genus distributions and average genus of bouquets and dipoles"};
  app.require_subcommand(1);
  Options opt;

  auto add_family = [&opt](CLI::App* cmd) {
    cmd->add_option("--family", opt.family, "graph family")
        ->required()
        ->check(CLI::IsMember({"bouquet", "dipole"}));
  };
  auto add_format = [&opt](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  CLI::App* dist = app.add_subcommand("dist", "genus distribution of one family member");
  add_family(dist);
  add_format(dist);
  dist->add_option("--n", opt.n, "number of loops / parallel edges")
      ->required()
      ->check(CLI::Range(1, 1000));

  CLI::App* avg = app.add_subcommand("avg", "average genus table for n = 1..n-max");
  add_family(avg);
  add_format(avg);
  avg->add_option("--n-max", opt.n_max, "largest n")
      ->required()
      ->check(CLI::Range(1, 100000));
  avg->add_option("--method", opt.method, "closed | recurrence | distribution")
      ->check(CLI::IsMember({"closed", "recurrence", "distribution"}));
  avg->add_option("--precision", opt.precision, "decimal digits")
      ->check(CLI::Range(0, 10000));
  avg->add_flag("--cross-check", opt.cross_check,
                "verify that all computation routes agree exactly");

  CLI::App* verify = app.add_subcommand("verify",
                                        "compare recurrences against the exhaustive oracle");
  add_family(verify);
  verify->add_option("--n-max", opt.n_max, "largest n")
      ->required()
      ->check(CLI::Range(1, 32));
  verify->add_option("--parallelism", opt.parallelism, "oracle worker threads")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--inject-fault", opt.inject_fault)->group("");  // tests only

  CLI::App* ode = app.add_subcommand("ode-check",
                                     "series residual of the generating-function ODE");
  add_family(ode);
  ode->add_option("--order", opt.order, "truncation order")->check(CLI::Range(5, 2000));

  CLI::App* asym = app.add_subcommand("asym", "asymptotic residual ladder");
  add_family(asym);
  add_format(asym);
  asym->add_option("--ladder", opt.ladder, "ascending n values")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(dist)) return run_dist(opt);
    if (app.got_subcommand(avg)) return run_avg(opt);
    if (app.got_subcommand(verify)) return run_verify(opt);
    if (app.got_subcommand(ode)) return run_ode_check(opt);
    return run_asym(opt);
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitVerificationFailure;
  }
}
