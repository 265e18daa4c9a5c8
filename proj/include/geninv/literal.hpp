#pragma once

// Text forms of rings and elements.
//
//   ring    := "Z" | "Z/" n | "M" k "(" ("Z" | "Z/" n) ")"
//   element := integer                         (scalar rings)
//            | "[" row ("," row)* "]"          (matrix rings, row-major)
//   row     := "[" integer ("," integer)* "]"
//
// Integers may be negative (ASCII '-' or U+2212) and are reduced into the
// ring. Whitespace is ignored between tokens.

#include "geninv/element.hpp"
#include "geninv/ring.hpp"

#include <string>
#include <string_view>

namespace geninv {

RingSpec parse_ring(std::string_view text);
Element parse_element(const RingSpec& ring, std::string_view text);

std::string format_element(const Element& x);

}  // namespace geninv
