#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "birkhoff/multipoly.hpp"

namespace birkhoff {

/// Parse the polynomial text grammar:
///
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := ('-' | '+') factor | atom ('^' integer)?
///   atom   := number ('/' number)? | variable | '(' expr ')'
///
/// Juxtaposition ("2x") is rejected. `vars` lists the accepted variable names;
/// when `allow_p` is set the name `p` denotes the formal coefficient parameter.
/// Throws ParseError with the byte offset of the problem.
MultiPoly parse_poly(std::string_view text,
                     const std::vector<std::string>& vars = {"x", "y", "z"},
                     bool allow_p = false);

/// Parse a rational literal "a" or "a/b" (optional sign).
Rational parse_rational(std::string_view text);

}  // namespace birkhoff
