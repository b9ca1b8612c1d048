#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace cda {

// Exact rational scalar. boost's cpp_rational keeps values fully reduced
// with a positive denominator, which is exactly the canonical form the
// external formats require.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Parses "p", "+p", "-p" or "p/q" where p, q are decimal digit strings and
// q > 0 carries no sign. Anything else (decimals, whitespace, empty, zero
// denominator) throws ParseError.
Rational parse_rational(std::string_view text);

// Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
// Round-trips through parse_rational.
std::string to_string(const Rational& q);

inline Rational rational_abs(const Rational& q) {
  return q < 0 ? Rational(-q) : q;
}

}  // namespace cda
