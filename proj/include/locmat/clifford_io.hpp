#pragma once

// Text forms used by the command line tool.
//
//   word     := letter (whitespace letter)*      letter := "x" rational ["^" int]
//   element  := ["-"] term (("+" | "-") term)*
//   term     := factor (["*"] factor)*
//   factor   := rational | "z" ["^" int] | letter | "(" element ")"
//
// Factors inside a term multiply left to right in the algebra, so an
// unordered product of letters is normalized. Printed elements use
// `coeff * x<i1>^<k1> x<i2>^<k2>` terms joined by ` + `, with the
// coefficient dropped when it is 1 and parenthesized when it has more than
// one power of z. Indices print as `p/q`.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locmat/clifford.hpp"

namespace locmat {

Word parse_word(std::string_view text);
CliffordElement parse_element(std::string_view text, int level);
/// An element expression that must be a scalar.
CycElem parse_cyclotomic(std::string_view text, int level);
/// Comma-separated rationals (decimal or p/q); empty text gives an empty list.
std::vector<GeneratorIndex> parse_index_list(std::string_view text);

std::string to_string(const GeneratorIndex& index);
std::string to_string(const Monomial& m);
std::string to_string(const CliffordElement& e);

}  // namespace locmat
