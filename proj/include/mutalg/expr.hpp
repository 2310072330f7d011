#pragma once

#include <string>
#include <string_view>

#include "mutalg/rational_function.hpp"

namespace mutalg {

/// Parses an expression over the variables of `ctx`.
///
/// Grammar: integer literals, identifiers, parentheses, binary `+ - * /`,
/// unary `-`, and `^` followed by an integer (negative exponents are
/// parenthesized: `x^(-2)`). Multiplication is explicit. `^` binds tighter
/// than unary minus, which binds tighter than `*` and `/`.
///
/// Throws ParseError (with a 1-based offset) on malformed text and on unknown
/// identifiers, and Error on division by zero.
RationalFunction parse_expr(std::string_view text, const VariableContext& ctx);

/// Parses and requires a Laurent polynomial result.
LaurentPolynomial parse_laurent(std::string_view text, const VariableContext& ctx);

/// Same text as to_string; parse_expr(format_expr(f)) == f.
std::string format_expr(const RationalFunction& f);
std::string format_expr(const LaurentPolynomial& f);

}  // namespace mutalg
