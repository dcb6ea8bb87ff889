#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace kantorovich {

/// Exact rational number backed by GMP. Expression templates are disabled so
/// that `auto` always yields a value.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Canonical "p/q" form: lowest terms, q > 0, and the denominator is always
/// written (so 2 becomes "2/1").
std::string to_string(const Rational& value);

/// Accepts "p/q" or a bare integer "p". Whitespace is not allowed. Throws
/// ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long numerator, long denominator = 1) {
  return Rational(numerator) / Rational(denominator);
}

}  // namespace kantorovich
