#pragma once

#include <string>
#include <string_view>

#include "tropical/polynomial.hpp"

namespace tropical {

// Polynomial text grammar. Terms are separated by "+" (tropical ⊕):
//
//   expr  := term ("+" term)*
//   term  := coef ["*"] "x" ["^" uint] | coef | "x" ["^" uint]
//   coef  := ["+" | "-"] uint ["/" uint] | "inf"
//
// Whitespace between tokens is ignored. A bare "x" has coefficient 0.
// Exponents are capped at 2^32. Throws ParseError with the offending
// position.
PolyExpr parse(std::string_view text);

// parse() followed by normalize().
TropPoly parse_poly(std::string_view text);

// Descending-degree text, e.g. "x^2 + 3x + 6", "3x^2 + 5x",
// "1/2 x + -2". The zero polynomial prints as "inf".
std::string format(const TropPoly& f);

}  // namespace tropical
