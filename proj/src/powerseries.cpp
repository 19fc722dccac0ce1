#include "genuslab/powerseries.hpp"

#include "genuslab/closedform.hpp"

#include <algorithm>
#include <initializer_list>
#include <utility>

namespace genuslab {

namespace {

const Rational kZero(0);

std::vector<Rational> rvec(std::initializer_list<long> values) {
  std::vector<Rational> out;
  out.reserve(values.size());
  for (long v : values) {
    out.emplace_back(v);
  }
  return out;
}

Rational coeff_or_zero(const TruncatedSeries& s, int exponent) {
  if (exponent < s.lowest()) {
    return kZero;
  }
  return s.coeff(exponent);
}

}  // namespace

TruncatedSeries::TruncatedSeries(int lowest, std::vector<Rational> coeffs)
    : lowest_(lowest), coeffs_(std::move(coeffs)) {}

TruncatedSeries TruncatedSeries::zero(int order) {
  if (order <= 0) {
    return TruncatedSeries(order, {});
  }
  return TruncatedSeries(0, std::vector<Rational>(static_cast<std::size_t>(order)));
}

TruncatedSeries TruncatedSeries::polynomial(int lowest, std::vector<Rational> coeffs,
                                            int order) {
  const int end = lowest + static_cast<int>(coeffs.size());
  if (order < end) {
    throw std::invalid_argument("polynomial order would truncate known coefficients");
  }
  coeffs.resize(static_cast<std::size_t>(order - lowest));
  return TruncatedSeries(lowest, std::move(coeffs));
}

const Rational& TruncatedSeries::coeff(int exponent) const {
  if (exponent < lowest_) {
    return kZero;
  }
  if (exponent >= order()) {
    throw std::out_of_range("coefficient request beyond truncation order");
  }
  return coeffs_[static_cast<std::size_t>(exponent - lowest_)];
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
  return TruncatedSeries(lowest_ + k, coeffs_);
}

TruncatedSeries TruncatedSeries::padded_below(int new_lowest) const {
  if (new_lowest > lowest_) {
    throw std::invalid_argument("padded_below can only extend the stored range");
  }
  std::vector<Rational> out(static_cast<std::size_t>(lowest_ - new_lowest));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return TruncatedSeries(new_lowest, std::move(out));
}

TruncatedSeries TruncatedSeries::normalized() const {
  std::size_t skip = 0;
  while (skip < coeffs_.size() && coeffs_[skip] == 0) {
    ++skip;
  }
  std::vector<Rational> out(coeffs_.begin() + static_cast<std::ptrdiff_t>(skip),
                            coeffs_.end());
  return TruncatedSeries(lowest_ + static_cast<int>(skip), std::move(out));
}

TruncatedSeries ps_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  const int lowest = std::min(a.lowest(), b.lowest());
  if (order <= lowest) {
    return TruncatedSeries(order, {});
  }
  std::vector<Rational> out(static_cast<std::size_t>(order - lowest));
  for (int e = lowest; e < order; ++e) {
    out[static_cast<std::size_t>(e - lowest)] = coeff_or_zero(a, e) + coeff_or_zero(b, e);
  }
  return TruncatedSeries(lowest, std::move(out));
}

TruncatedSeries ps_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  return ps_add(a, ps_scale(Rational(-1), b));
}

TruncatedSeries ps_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int lowest = a.lowest() + b.lowest();
  const int order = std::min(a.order() + b.lowest(), b.order() + a.lowest());
  if (order <= lowest) {
    return TruncatedSeries(order, {});
  }
  std::vector<Rational> out(static_cast<std::size_t>(order - lowest));
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    const int ea = a.lowest() + static_cast<int>(i);
    for (std::size_t j = 0; j < cb.size(); ++j) {
      const int e = ea + b.lowest() + static_cast<int>(j);
      if (e >= order) break;
      if (cb[j] == 0) continue;
      out[static_cast<std::size_t>(e - lowest)] += ca[i] * cb[j];
    }
  }
  return TruncatedSeries(lowest, std::move(out));
}

TruncatedSeries ps_scale(const Rational& factor, const TruncatedSeries& a) {
  std::vector<Rational> out(a.coeffs());
  for (Rational& c : out) {
    c *= factor;
  }
  return TruncatedSeries(a.lowest(), std::move(out));
}

TruncatedSeries ps_derivative(const TruncatedSeries& a) {
  std::vector<Rational> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int e = a.lowest() + static_cast<int>(i);
    out[i] = Rational(e) * a.coeffs()[i];
  }
  return TruncatedSeries(a.lowest() - 1, std::move(out));
}

TruncatedSeries ps_geometric(int order) {
  if (order < 1) {
    throw std::invalid_argument("ps_geometric requires order >= 1");
  }
  return TruncatedSeries(0, std::vector<Rational>(static_cast<std::size_t>(order),
                                                  Rational(1)));
}

TruncatedSeries ps_log_one_minus(int order) {
  if (order < 1) {
    throw std::invalid_argument("ps_log_one_minus requires order >= 1");
  }
  std::vector<Rational> out(static_cast<std::size_t>(order - 1));
  for (int m = 1; m < order; ++m) {
    out[static_cast<std::size_t>(m - 1)] = frac(-1, m);
  }
  return TruncatedSeries(1, std::move(out));
}

TruncatedSeries ps_log_one_plus(int order) {
  if (order < 1) {
    throw std::invalid_argument("ps_log_one_plus requires order >= 1");
  }
  std::vector<Rational> out(static_cast<std::size_t>(order - 1));
  for (int m = 1; m < order; ++m) {
    out[static_cast<std::size_t>(m - 1)] = frac(m % 2 == 0 ? -1 : 1, m);
  }
  return TruncatedSeries(1, std::move(out));
}

std::optional<int> first_nonzero_exponent(const TruncatedSeries& a) {
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] != 0) {
      return a.lowest() + static_cast<int>(i);
    }
  }
  return std::nullopt;
}

IdentityViolation::IdentityViolation(int exponent, const Rational& lhs, const Rational& rhs)
    : std::runtime_error("series identity violated at exponent " +
                         std::to_string(exponent) + ": " + fraction_string(lhs) +
                         " != " + fraction_string(rhs)),
      exponent_(exponent),
      lhs_(lhs),
      rhs_(rhs) {}

void require_equal_coefficients(const TruncatedSeries& a, const TruncatedSeries& b,
                                int from, int to) {
  if (to > a.order() || to > b.order()) {
    throw std::invalid_argument("comparison range exceeds a truncation order");
  }
  for (int e = from; e < to; ++e) {
    const Rational lhs = coeff_or_zero(a, e);
    const Rational rhs = coeff_or_zero(b, e);
    if (lhs != rhs) {
      throw IdentityViolation(e, lhs, rhs);
    }
  }
}

TruncatedSeries bouquet_avg_series(int order) {
  if (order < 1) {
    throw std::invalid_argument("bouquet_avg_series requires order >= 1");
  }
  std::vector<Rational> out(static_cast<std::size_t>(order));
  if (order > 1) {
    const auto table = avg_genus_bouquet_table(order - 1);
    for (int n = 1; n < order; ++n) {
      out[static_cast<std::size_t>(n)] = table[static_cast<std::size_t>(n)];
    }
  }
  return TruncatedSeries(0, std::move(out));
}

TruncatedSeries bouquet_ode_residual_for(const TruncatedSeries& series) {
  const int order = series.order();
  const auto derivative = ps_derivative(series);
  const auto lhs = ps_add(
      ps_mul(derivative, TruncatedSeries::polynomial(1, rvec({1, 0, -1}), order + 2)),
      ps_mul(series, TruncatedSeries::polynomial(0, rvec({1, -2, -1}), order + 1)));
  const auto geometric = ps_geometric(order);
  const auto rhs = ps_mul(geometric, geometric).shifted(2);
  return ps_sub(lhs, rhs);
}

TruncatedSeries bouquet_ode_residual(int order) {
  if (order < 4) {
    throw std::invalid_argument("bouquet_ode_residual requires order >= 4");
  }
  return bouquet_ode_residual_for(bouquet_avg_series(order));
}

TruncatedSeries bouquet_closed_rational_part(int order) {
  std::vector<Rational> out(static_cast<std::size_t>(order));
  for (int n = 0; n < order; ++n) {
    out[static_cast<std::size_t>(n)] = frac(n + 1, 2);
  }
  return TruncatedSeries(0, std::move(out));
}

namespace {

// (1+t) * 1/(1-t) * kernel(t), where kernel is ln(1 -+ t)/t.
TruncatedSeries log_component(int order, const TruncatedSeries& log_series,
                              const Rational& scale) {
  const auto kernel = log_series.shifted(-1);
  const auto prod = ps_mul(ps_mul(ps_geometric(order), kernel),
                           TruncatedSeries::polynomial(0, rvec({1, 1}), order));
  return ps_scale(scale, prod);
}

}  // namespace

TruncatedSeries bouquet_closed_log_minus_part(int order) {
  return log_component(order, ps_log_one_minus(order + 1), frac(1, 4));
}

TruncatedSeries bouquet_closed_log_plus_part(int order) {
  return log_component(order, ps_log_one_plus(order + 1), frac(-1, 4));
}

TruncatedSeries bouquet_closed_series(int order) {
  if (order < 2) {
    throw std::invalid_argument("bouquet_closed_series requires order >= 2");
  }
  const auto sum = ps_add(ps_add(bouquet_closed_rational_part(order),
                                 bouquet_closed_log_minus_part(order)),
                          bouquet_closed_log_plus_part(order));
  require_equal_coefficients(sum, bouquet_avg_series(order), 0, order);
  return sum;
}

TruncatedSeries dipole_avg_series(int order) {
  if (order < 1) {
    throw std::invalid_argument("dipole_avg_series requires order >= 1");
  }
  const auto table = avg_genus_dipole_table(order + 2);
  std::vector<Rational> out(static_cast<std::size_t>(order));
  for (int k = 0; k < order; ++k) {
    out[static_cast<std::size_t>(k)] = table[static_cast<std::size_t>(k + 3)];
  }
  return TruncatedSeries(0, std::move(out));
}

TruncatedSeries dipole_ode_residual_for(const TruncatedSeries& series) {
  const int order = series.order();
  const auto d1 = ps_derivative(series);
  const auto d2 = ps_derivative(d1);
  auto lhs = ps_mul(d2, TruncatedSeries::polynomial(2, rvec({1, 0, -1}), order + 3));
  lhs = ps_add(lhs, ps_mul(d1, TruncatedSeries::polynomial(1, rvec({7, -2, -9}),
                                                           order + 2)));
  lhs = ps_add(lhs, ps_mul(series, TruncatedSeries::polynomial(0, rvec({8, -7, -15}),
                                                               order + 1)));
  const auto geometric = ps_geometric(order);
  const auto cubed = ps_mul(ps_mul(geometric, geometric), geometric);
  const auto rhs =
      ps_mul(cubed, TruncatedSeries::polynomial(0, rvec({4, -3, 1}), order + 1));
  return ps_sub(lhs, rhs);
}

TruncatedSeries dipole_ode_residual(int order) {
  if (order < 5) {
    throw std::invalid_argument("dipole_ode_residual requires order >= 5");
  }
  return dipole_ode_residual_for(dipole_avg_series(order));
}

TruncatedSeries dipole_closed_principal_part(int order) {
  if (order <= -2) {
    throw std::invalid_argument("dipole_closed_principal_part order too small");
  }
  return TruncatedSeries(-2, std::vector<Rational>(static_cast<std::size_t>(order + 2),
                                                   frac(-1, 4)));
}

TruncatedSeries dipole_closed_weight_part(int order) {
  if (order <= -4) {
    throw std::invalid_argument("dipole_closed_weight_part order too small");
  }
  std::vector<Rational> out(static_cast<std::size_t>(order + 4));
  for (int m = -4; m < order; ++m) {
    out[static_cast<std::size_t>(m + 4)] = frac(m + 5, 4);
  }
  return TruncatedSeries(-4, std::move(out));
}

TruncatedSeries dipole_closed_log_part(int order) {
  const auto log_minus = ps_log_one_minus(order);
  const auto log_plus = ps_log_one_plus(order);
  const auto log_sum = ps_add(log_minus, log_plus);
  auto series = TruncatedSeries::polynomial(2, rvec({3, -1}), order);
  series = ps_add(series,
                  ps_mul(TruncatedSeries::polynomial(2, rvec({-2, 2}), order), log_plus));
  series = ps_add(series,
                  ps_mul(TruncatedSeries::polynomial(1, rvec({-2}), order), log_sum));
  series = ps_add(series, ps_scale(Rational(2), log_sum));
  return series;
}

TruncatedSeries dipole_closed_series(int order) {
  if (order < 1) {
    throw std::invalid_argument("dipole_closed_series requires order >= 1");
  }
  const auto log_part = dipole_closed_log_part(order + 6).padded_below(0);
  const auto second = ps_mul(log_part, dipole_closed_weight_part(order + 2));
  const auto sum = ps_add(dipole_closed_principal_part(order), second);
  for (int e = -4; e < 0; ++e) {
    if (sum.coeff(e) != 0) {
      throw IdentityViolation(e, sum.coeff(e), kZero);
    }
  }
  require_equal_coefficients(sum, dipole_avg_series(order), 0, order);
  return sum;
}

}  // namespace genuslab
