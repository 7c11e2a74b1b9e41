#pragma once

#include "ltl3/formula.hpp"

#include <cstddef>
#include <string_view>

namespace ltl3 {

/// Parses concrete LTL syntax into the primitive AST, expanding sugar.
///
/// Grammar, loosest binding first:
///
///     impl   := or ( "->" impl )?              right-associative
///     or     := and ( "|" and )*
///     and    := until ( "&" until )*
///     until  := unary ( ("U" | "R") until )?   right-associative
///     unary  := ("!" | "X" | "F" | "G") unary | primary
///     primary:= "true" | "false" | ident | "(" impl ")"
///
/// Desugaring: false = !true, a -> b = !a | b, F a = true U a,
/// G a = !(true U !a), a R b = !(!a U !b).
///
/// Throws ParseError carrying the 1-based line and column of the offending
/// token. Nesting deeper than max_depth is rejected rather than risking the
/// stack on hostile input.
Formula parse(std::string_view text, std::size_t max_depth = 2000);

} // namespace ltl3
