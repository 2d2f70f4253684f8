#pragma once

// Tiny expression grammar for polynomial templates such as
// "t^(n-1)*(t^n - 1)/(t - 1)" or "t*prod(i=1..n, t^i + 1)".
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/' | <juxtaposition>) unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' ['-'] primary)?
//   primary := integer | 't' | name | '(' expr ')'
//            | 'prod' '(' name '=' expr '..' expr ',' expr ')'
//
// '/' is exact Laurent division; exponents must evaluate to integer
// constants. Names other than 't' are looked up in the bindings.

#include <map>
#include <string>
#include <string_view>

#include "satkit/exactpoly.hpp"

namespace satkit {

using Bindings = std::map<std::string, long>;

LaurentPoly eval_poly_expr(std::string_view text, const Bindings& bindings = {});

// Same grammar, but the value must be an integer constant.
long eval_int_expr(std::string_view text, const Bindings& bindings = {});

// Replaces every "{expr}" in the template by the integer value of expr,
// e.g. "A{n-1}" with n=4 gives "A3".
std::string substitute_braces(std::string_view text, const Bindings& bindings);

}  // namespace satkit
