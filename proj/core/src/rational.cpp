#include "sfc/rational.hpp"

#include <stdexcept>

namespace sfc {

namespace {

using boost::multiprecision::mpz_int;

bool is_integer_text(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_text(text))
      throw std::invalid_argument("not a rational: '" + text + "'");
    return Rational(mpz_int(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den))
    throw std::invalid_argument("not a rational: '" + text + "'");
  mpz_int d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return Rational(mpz_int(num), d);
}

std::string rational_to_string(const Rational& value) {
  const mpz_int num = numerator(value);
  const mpz_int den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string rational_to_decimal(const Rational& value, int significant) {
  if (value == 0) return "0";
  mpz_int num = numerator(value);
  const mpz_int den = denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;

  // Find the decimal exponent e with 10^e <= num/den < 10^(e+1).
  int e = 0;
  mpz_int lo = num, hi = den;    // compare num/den against 10^e as lo vs hi
  if (num >= den) {
    while (lo >= hi * 10) { hi *= 10; ++e; }
  } else {
    while (lo < hi) { lo *= 10; --e; }
    hi = den;
    lo = num;
    for (int i = 0; i < -e; ++i) lo *= 10;
  }

  // Round num/den * 10^(significant-1-e) half-to-even to an integer of at
  // most `significant` digits.
  mpz_int scaled_num = num;
  mpz_int scaled_den = den;
  const int shift = significant - 1 - e;
  for (int i = 0; i < shift; ++i) scaled_num *= 10;
  for (int i = 0; i < -shift; ++i) scaled_den *= 10;
  mpz_int q = scaled_num / scaled_den;
  const mpz_int r = scaled_num - q * scaled_den;
  const mpz_int twice = r * 2;
  if (twice > scaled_den || (twice == scaled_den && (q % 2) != 0)) ++q;

  std::string digits = q.str();
  if ((int)digits.size() > significant) {
    // Rounding overflowed into one more digit (e.g. 999.. -> 1000..).
    digits.pop_back();
    ++e;
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

  std::string out;
  if (negative) out.push_back('-');
  if (e >= 0) {
    if ((int)digits.size() > e + 1) {
      out += digits.substr(0, e + 1);
      out.push_back('.');
      out += digits.substr(e + 1);
    } else {
      out += digits;
      out.append(e + 1 - digits.size(), '0');
    }
  } else {
    out += "0.";
    out.append(-e - 1, '0');
    out += digits;
  }
  return out;
}

} // namespace sfc
