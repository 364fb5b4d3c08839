/* Exact arithmetic scalar types shared by the whole library. */
#ifndef SFC_RATIONAL_HPP
#define SFC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace sfc {

// Tree positions can exceed 64 bits (level 30 base 9 already does), so they are
// arbitrary-precision throughout the general engine; cpp_int keeps small values
// on the stack, which is the fast path for every practical level.
using BigInt = boost::multiprecision::cpp_int;

// Canonical form (lowest terms, positive denominator) is maintained by mpq.
using Rational = boost::multiprecision::mpq_rational;

// Parses "p", "-p", "p/q" with arbitrary-size integer parts. Throws
// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// "p" or "p/q" in lowest terms; the exact inverse of parse_rational.
std::string rational_to_string(const Rational& value);

// Shortest decimal representation with at most `significant` significant
// digits, round-half-to-even, no exponent. Deterministic; used for SVG output.
std::string rational_to_decimal(const Rational& value, int significant = 9);

} // namespace sfc

#endif
