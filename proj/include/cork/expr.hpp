#pragma once

// Exact evaluation of certificate side conditions.
//
// Grammar: or := and ('||' and)*; and := cmp ('&&' cmp)*;
// cmp := sum (('=='|'!='|'<'|'<='|'>'|'>=') sum)?; sum := prod (('+'|'-') prod)*;
// prod := unary (('*'|'/') unary)*; unary := '-' unary | atom;
// atom := number | name | 'abs(' or ')' | '(' or ')'.
// Truth values are 1 and 0.

#include "cork/rational.hpp"

#include <map>
#include <string>
#include <string_view>

namespace cork::expr {

using Bindings = std::map<std::string, Rational, std::less<>>;

/// Throws ParseError on malformed text, unbound names or division by zero.
Rational evaluate(std::string_view text, const Bindings& bindings);

bool holds(std::string_view text, const Bindings& bindings);

}  // namespace cork::expr
