#pragma once

#include <string>
#include <string_view>

#include "svlie/tensor.hpp"

namespace svlie {

// Text grammar:
//   element  := term (("+"|"-") term)*     term   := [rational "*"] gen
//   tensor2  := t2term (("+"|"-") t2term)* t2term := [rational "*"] gen "(x)" gen
//   tensor3  := likewise with two "(x)"
//   gen      := ("L"|"M") "[" int "]" | "Y" "[" halfodd "]"
// A sign may precede the first term, "⊗" is accepted for "(x)", and a lone
// "0" is the zero value. All parse functions throw ParseError.

Rational parse_rational(std::string_view text);
BasisVector parse_basis(std::string_view text);
Element parse_element(std::string_view text);
Tensor2 parse_tensor2(std::string_view text);
Tensor3 parse_tensor3(std::string_view text);

/// Rank taken from the first term; "0" parses as the zero Element.
AnyValue parse_any(std::string_view text);

std::string format(const Rational& q);
std::string format(const BasisVector& b);
std::string format(const Element& x);
std::string format(const Tensor2& t);
std::string format(const Tensor3& t);
std::string format(const AnyValue& v);

}  // namespace svlie
