#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pfister/quadform.hpp"
#include "pfister/symbols.hpp"

// Text syntax.
//   element : + * / ^ (integer exponent), parentheses, variables of the ring,
//             numeric literals read as hexadecimal coefficient bit vectors
//             ("1", "0x3").
//   form    : terms joined by "_|_"; a term is "<a>", "[a,b]", "[[s1,...,c]]",
//             "((e1,...,en))" or "<a,b,...>" (quasilinear), optionally prefixed
//             by "<<b1,...,bk>>*" (Pfister), "<c1,...,ck>*" (diagonal) or a
//             plain scalar "c*".
//   symbol  : "((e1,...,en))"; a symbol sum joins symbols with "+" ("0" is empty).
namespace pfister {

FieldElement parse_element(std::string_view text, const RingPtr& ring);
QuadraticForm parse_form(std::string_view text, const RingPtr& ring);
QPfisterSymbol parse_symbol(std::string_view text, const RingPtr& ring);
// fold is only used for the empty sum "0".
SymbolSum parse_symbol_sum(std::string_view text, const RingPtr& ring, std::size_t fold = 0);
PfisterForm parse_pfister(std::string_view text, const RingPtr& ring);

// Identifiers in order of first appearance; used to infer the variables.
std::vector<std::string> collect_identifiers(std::string_view text);

}  // namespace pfister
