#pragma once

#include <string>
#include <vector>

#include "dls/bipoly.hpp"

namespace dls {

// Grammar: sums of products of numbers, variables and parenthesized
// expressions, with ^ for nonnegative integer powers and / by constants.
// The field generator is referenced by its declared name.
UniPoly parse_uni(const std::string& text, const NumberField& K, const std::string& var = "x");
BiPoly parse_bi(const std::string& text, const NumberField& K, const std::string& xvar = "X",
                const std::string& yvar = "Y");
NFElement parse_element(const std::string& text, const NumberField& K);
// Minimal polynomial text in the generator name, e.g. "a^2+a+2".
NumberField parse_field(const std::string& minpoly_text, const std::string& gen = "a");
// "a: a^2+a+2" or "Q".
NumberField parse_field_decl(const std::string& decl);

// Cycle notation "(0 1 2)(3 4)" on points 0..n-1.
std::vector<int> parse_cycles(const std::string& text, int n);

}  // namespace dls
