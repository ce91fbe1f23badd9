#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gsub {

/// Arbitrary-precision rational, always kept canonical (den > 0, lowest terms).
using Rational = mpq_class;

/// Accepts "p/q" (any sign, any common factor), plain integers and finite
/// decimals such as "0.125". Throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering: "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

/// The one conversion from exact to binary64. All tolerance comparisons in
/// the library happen after this call, never on Rational values.
inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace gsub
