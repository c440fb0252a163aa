#pragma once

#include <string_view>

#include "cremona/polynomial.hpp"

namespace cremona {

/// Parses the expression grammar:
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := '-' unary | primary
///   primary := rational | variable ['^' nat] | '(' expr ')' ['^' nat]
///   rational:= nat ['/' nat]
///   variable:= 'X' digits          (index 0..99, at most ambient_n)
/// '#' starts a comment to end of line; whitespace is insignificant; there
/// is no implicit multiplication.  Throws parse_error with line/column.
Polynomial parse_polynomial(std::string_view text, int ambient_n);

}  // namespace cremona
