#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plab/rational_function.hpp"

namespace plab {

/// Parses a rational expression over the declared variable names into a
/// canonical rational function. Grammar: +, -, *, / (left-associative,
/// standard precedence), ^ with an optionally negated integer literal
/// exponent (binds tightest), parentheses, integer literals, unary minus.
/// Rational constants are written as divisions: "-1/2".
RationalFunction parse_expr(std::string_view text, std::span<const std::string> variables);

/// Deterministic plain-text form of a rational function: terms in ascending
/// graded-lex order, "/(...)" for a nontrivial denominator. Round-trips
/// through parse_expr.
std::string format_expr(const RationalFunction& f, std::span<const std::string> variables);

/// Term-list form of a Laurent polynomial ("x + 2*y^-1" style).
std::string format_laurent(const LaurentPolynomial& f, std::span<const std::string> variables);

/// Single-term form, e.g. "-1/2*x*y^3".
std::string format_term(const ExponentVector& e, const Rational& c,
                        std::span<const std::string> variables);

} // namespace plab
