#pragma once

#include <string>
#include <string_view>

#include "cremona/context.hpp"
#include "cremona/multipoly.hpp"

namespace cremona {

// Text grammar for polynomials:
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | var ['^' exponent]
// with rationals like `3` or `3/2`, variable names [a-z][a-z0-9]*, and
// whitespace ignored between tokens. Every variable must belong to ctx.
// Errors carry the 1-based column of the offending token.
MultiPoly<Rational> parse_poly(std::string_view text, const ContextPtr& ctx);

// Canonical form: terms in descending graded-lex order, `*`-joined factors,
// `^1` omitted, unit coefficients omitted next to variables. parse_poly of
// the output reproduces the input exactly.
std::string format_poly(const MultiPoly<Rational>& p);

}  // namespace cremona
