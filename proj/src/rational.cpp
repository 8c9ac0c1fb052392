#include "crbr/rational.hpp"

namespace crbr {

std::string decimal4(const Rational& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);  // always > 0
  const bool negative = num < 0;

  BigInt scaled = abs(num) * 10000;
  BigInt quotient, remainder;
  divide_qr(scaled, den, quotient, remainder);
  if (2 * remainder >= den) ++quotient;  // half away from zero

  const BigInt whole = quotient / 10000;
  const BigInt frac = quotient % 10000;

  std::string frac_digits = frac.str();
  frac_digits.insert(0, 4 - frac_digits.size(), '0');

  std::string out;
  if (negative && (whole != 0 || frac != 0)) out += '-';
  out += whole.str();
  out += '.';
  out += frac_digits;
  return out;
}

}  // namespace crbr
