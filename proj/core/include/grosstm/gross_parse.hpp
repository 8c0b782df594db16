#pragma once

#include "grosstm/gross_number.hpp"

#include <string_view>

namespace grosstm {

// Parses the gross-expression grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' atom)?
//   atom   := '-' atom | INT ('/' INT)? | 'G' | '(' expr ')'
// 'G' is the infinite unit. INT '/' INT binds tighter than term-level
// division, so "1/2*G" is (1/2)*G. Whitespace is insignificant.
// Throws SyntaxError with the byte offset; pow/div errors propagate.
GrossNumber parse_gross(std::string_view text);

}  // namespace grosstm
