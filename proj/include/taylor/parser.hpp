#pragma once

#include <optional>
#include <string_view>

#include "taylor/expr.hpp"

namespace taylor {

/**
 * Parses an expression or a top-level tuple "(e1, e2, ...)" into a smooth map.
 *
 *   expr   := term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := atom ('^' NAT)? | '-' factor
 *   atom   := NUM | 'x' NAT | FUNC '(' expr ')' | '(' expr (',' expr)* ')'
 *   FUNC   := sin | cos | exp | ln
 *
 * The arity is `arity` when given (ParseError if a variable exceeds it),
 * otherwise one more than the largest variable index used.
 */
SmoothMap parse_map(std::string_view text, std::optional<std::size_t> arity = std::nullopt);

/// Parses a single expression; a tuple is an error.
Expr parse_expr(std::string_view text);

}  // namespace taylor
