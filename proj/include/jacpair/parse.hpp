#pragma once

#include "jacpair/poly.hpp"

#include <string_view>

namespace jacpair {

// Recursive-descent parser for the canonical polynomial text form:
//   expr   := '-'? term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' int)?
//   base   := rational | 'x' | 'y' | '(' expr ')'
// Whitespace is ignored, implicit multiplication is rejected, rationals are
// "p/q" literals (no decimals). Negative exponents require laurent mode and
// a monomial base. Syntax errors carry the 1-based offset.
LaurentPoly parse_poly(std::string_view text, bool laurent = false);

} // namespace jacpair
