#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace singspec {

/// Arbitrary-precision exact rational. Always kept canonical (reduced,
/// positive denominator).
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q" (optional sign, decimal digits, q > 0).
/// Throws ParseError.
Rational parse_rational(std::string_view text);

/// Decimal approximation for human-facing output only.
std::string to_approx_string(const Rational& q, int digits = 6);

/// Exact sum of a list of rationals.
Rational sum(const std::vector<Rational>& xs);

}  // namespace singspec
