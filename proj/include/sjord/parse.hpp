#pragma once

// Text form of algebra expressions, used to transcribe relation lists.
//
//   expr    := term (('+' | '-') term)*
//   term    := ['-'] factor (('*' | '/') factor)*
//   factor  := atom ['^' exponent]
//   atom    := number | 'h' | symbol | '(' expr ')' | '[' expr ',' expr ']'
//
// `[a, b]` is the graded commutator. Dividing by a monomial c*h^k is exact
// division of the whole term. Exponents of T may be negative or +-1/2.

#include <map>
#include <string>
#include <string_view>

#include "sjord/expr.hpp"
#include "sjord/report.hpp"

namespace sjord {

using SymbolTable = std::map<std::string, Expr, std::less<>>;

/// Throws Error with the offending position on malformed input.
Expr parse_expr(std::string_view text, const SymbolTable& symbols);

/// "lhs = rhs" into a Relation with the given id.
Relation parse_relation(const std::string& id, std::string_view text, const SymbolTable& symbols);

}  // namespace sjord
