#pragma once

#include <string_view>
#include <vector>

#include "locmult/polynomial.hpp"

namespace locmult {

// Grammar (whitespace ignored):
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nonneg-int)?
//   base     := variable | rational | '(' expr ')' | '-' base
//   rational := int ('/' positive-int)?
// No implicit multiplication. Errors carry the byte offset.

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Comma-separated list of expressions.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring);

}  // namespace locmult
