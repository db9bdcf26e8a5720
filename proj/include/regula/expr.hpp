#ifndef REGULA_EXPR_HPP
#define REGULA_EXPR_HPP

#include <string>
#include <string_view>

#include "regula/ratfunc.hpp"

namespace regula {

/// Parses numbers ("3", "1/2", "0.25"), the indeterminate `variable`,
/// + - * / ^ and parentheses. "^" takes an integer exponent and binds tighter
/// than unary minus, so "-x^2" is -(x^2). Throws ParseError with the offending
/// position, or AlgebraError on division by zero.
RatFunc parse_expr(std::string_view src, const std::string& variable);

/// Canonical text: descending powers, "c*x^k" terms, reduced with a monic
/// denominator, parentheses only around multi-term parts. Round-trips
/// through parse_expr.
std::string print_expr(const RatFunc& f);
std::string print_poly(const Poly& p);

}  // namespace regula

#endif  // REGULA_EXPR_HPP
