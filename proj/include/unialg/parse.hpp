#pragma once

#include <string_view>
#include <vector>

#include "unialg/monomial.hpp"
#include "unialg/monomial_ideal.hpp"
#include "unialg/ring.hpp"

namespace unialg {

// Shared text grammar:
//   monomial := factor ('*' factor)* | '1'
//   factor   := name ['^' digits]
//   ideal    := monomial (',' monomial)* | '0'
// Errors carry a 1-based column into the input string.

Monomial parse_monomial(std::string_view text, const Ring &ring);
std::vector<Monomial> parse_monomial_list(std::string_view text, const Ring &ring);
MonomialIdeal parse_monomial_ideal(std::string_view text, const Ring &ring);

} // namespace unialg
