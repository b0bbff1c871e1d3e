#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace locmult {

/// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// num/den in lowest terms; den must be nonzero.
Rational make_rational(long num, long den = 1);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& value);

/// Accepts "p" or "p/q" with an optional leading '-'; q must be positive.
Rational parse_rational(std::string_view text);

}  // namespace locmult
