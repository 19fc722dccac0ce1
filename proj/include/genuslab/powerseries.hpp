#pragma once

#include "genuslab/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace genuslab {

// Truncated Laurent series with exact rational coefficients. Coefficients
// are stored for exponents lowest .. order-1; exponents below `lowest` are
// identically zero, exponents at or above `order` are unknown. A plain power
// series has lowest == 0.
class TruncatedSeries {
 public:
  TruncatedSeries(int lowest, std::vector<Rational> coeffs);

  // Known-zero series through order-1.
  static TruncatedSeries zero(int order);

  // Exactly known polynomial starting at `lowest`, padded with known zeros
  // up to the requested order so products keep their accuracy.
  static TruncatedSeries polynomial(int lowest, std::vector<Rational> coeffs, int order);

  int lowest() const { return lowest_; }
  int order() const { return lowest_ + static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  // Coefficient of t^exponent. Asking at or above `order` is a caller bug.
  const Rational& coeff(int exponent) const;

  // Multiply by t^k (exact in both coefficients and order bookkeeping).
  TruncatedSeries shifted(int k) const;

  // Extend the stored range down with explicit zeros (they are known zeros
  // by the class invariant). Used before products whose principal parts are
  // checked coefficient by coefficient.
  TruncatedSeries padded_below(int new_lowest) const;

  // Strip leading stored zeros. Only on explicit request: cancellation
  // checks need them visible.
  TruncatedSeries normalized() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

 private:
  int lowest_;
  std::vector<Rational> coeffs_;
};

// Exact coefficient arithmetic. Addition keeps the weaker truncation order
// of the operands; multiplication keeps
//   min(order_a + lowest_b, order_b + lowest_a).
TruncatedSeries ps_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ps_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ps_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries ps_scale(const Rational& factor, const TruncatedSeries& a);

// Termwise derivative; the order drops by one.
TruncatedSeries ps_derivative(const TruncatedSeries& a);

// Kernels generated straight from their coefficient formulas.
TruncatedSeries ps_geometric(int order);      // 1/(1-t) = sum t^l
TruncatedSeries ps_log_one_minus(int order);  // ln(1-t) = sum_{m>=1} -t^m/m
TruncatedSeries ps_log_one_plus(int order);   // ln(1+t) = sum_{m>=1} (-1)^{m+1} t^m/m

std::optional<int> first_nonzero_exponent(const TruncatedSeries& a);

// A series identity failed coefficientwise.
class IdentityViolation : public std::runtime_error {
 public:
  IdentityViolation(int exponent, const Rational& lhs, const Rational& rhs);
  int exponent() const { return exponent_; }
  const Rational& lhs() const { return lhs_; }
  const Rational& rhs() const { return rhs_; }

 private:
  int exponent_;
  Rational lhs_;
  Rational rhs_;
};

// Coefficientwise comparison on [from, to); throws IdentityViolation at the
// first mismatch.
void require_equal_coefficients(const TruncatedSeries& a, const TruncatedSeries& b,
                                int from, int to);

// --- Bouquet average-genus generating function -----------------------------

// Ordinary generating function of the bouquet average-genus sequence,
// coefficients from the recurrence table; constant term 0, order as given.
TruncatedSeries bouquet_avg_series(int order);

// Residual of the first-order ODE the generating function satisfies:
//   u'(t)(t - t^3) + u(t)(1 - 2t - t^2) - t^2/(1-t)^2.
// Identically zero for the true series; every stored coefficient is checked
// by the caller. The _for variant accepts a (possibly perturbed) series.
TruncatedSeries bouquet_ode_residual(int order);
TruncatedSeries bouquet_ode_residual_for(const TruncatedSeries& series);

// The three closed-form components: 1/(2(1-t)^2), the ln(1-t) combination
// and the ln(1+t) combination, each expanded through the requested order.
TruncatedSeries bouquet_closed_rational_part(int order);
TruncatedSeries bouquet_closed_log_minus_part(int order);
TruncatedSeries bouquet_closed_log_plus_part(int order);

// Sum of the three components; throws IdentityViolation unless it matches
// bouquet_avg_series coefficient by coefficient.
TruncatedSeries bouquet_closed_series(int order);

// --- Dipole average-genus generating function -------------------------------

// Generating function shifted so the lowest retained exponent is 0 (the two
// leading sequence values vanish); coefficient k holds the value for n = k+3.
TruncatedSeries dipole_avg_series(int order);

// Residual of the second-order ODE:
//   (t^2 - t^4) u'' + (7t - 2t^2 - 9t^3) u' + (8 - 7t - 15t^2) u
//     - (4 - 3t + t^2)/(1-t)^3.
TruncatedSeries dipole_ode_residual(int order);
TruncatedSeries dipole_ode_residual_for(const TruncatedSeries& series);

// Laurent pieces of the closed form: the pole term expanding to
// sum_{m>=-2} (-1/4) t^m, the weight term sum_{m>=-4} (m+5)/4 t^m, and the
// logarithmic combination whose coefficients reproduce the dipole summands.
TruncatedSeries dipole_closed_principal_part(int order);
TruncatedSeries dipole_closed_weight_part(int order);
TruncatedSeries dipole_closed_log_part(int order);

// principal + log * weight. Throws IdentityViolation unless the four
// negative-exponent coefficients cancel exactly and the nonnegative ones
// match dipole_avg_series.
TruncatedSeries dipole_closed_series(int order);

}  // namespace genuslab
