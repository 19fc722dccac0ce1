#include "genuslab/rational.hpp"

#include <stdexcept>

namespace genuslab {

BigInt factorial(unsigned long n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Rational frac(long num, long den) {
  if (den == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Rational value;
  mpq_set_si(value.get_mpq_t(), num, static_cast<unsigned long>(den));
  value.canonicalize();
  return value;
}

Rational frac(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string fraction_string(const Rational& value) { return value.get_str(); }

Rational parse_fraction(const std::string& text) {
  Rational value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (sgn(value.get_den()) == 0) {
    throw std::invalid_argument("rational with zero denominator: '" + text + "'");
  }
  value.canonicalize();
  return value;
}

std::string decimal_string(const Rational& value, int precision) {
  if (precision < 0) {
    throw std::invalid_argument("decimal precision must be >= 0");
  }
  const bool negative = sgn(value) < 0;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(precision));

  BigInt scaled = abs(value.get_num()) * scale;
  BigInt digits, remainder;
  mpz_fdiv_qr(digits.get_mpz_t(), remainder.get_mpz_t(), scaled.get_mpz_t(),
              value.get_den().get_mpz_t());
  // Round half to even on the exact remainder.
  remainder *= 2;
  const int half = cmp(remainder, value.get_den());
  if (half > 0 || (half == 0 && mpz_odd_p(digits.get_mpz_t()))) {
    ++digits;
  }

  BigInt whole = digits / scale;
  BigInt fractional = digits % scale;
  std::string out;
  if (negative && sgn(digits) != 0) {
    out += '-';
  }
  out += whole.get_str();
  if (precision > 0) {
    const std::string tail = fractional.get_str();
    out += '.';
    out.append(static_cast<std::size_t>(precision) - tail.size(), '0');
    out += tail;
  }
  return out;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace genuslab
