#pragma once

#include <random>

#include "dls/decompose.hpp"
#include "dls/families.hpp"

namespace dls::gen {

// Integer coefficients in [-height, height], exact degree d.
UniPoly random_poly(std::mt19937& rng, int d, int height = 20);
LinearMap random_linear(std::mt19937& rng, int height = 20);

struct Pair {
  UniPoly f, g;
  int kind;  // 1 common left factor, 2 exceptional degree 7, 3 Dickson
};
// Reducible pair of degree <= max_deg from one of the three reducibility cases.
Pair theorem_pair(std::mt19937& rng, int max_deg = 16);

struct MNInstance {
  UniPoly P, Q, f, g;
};
// Simply branched P, Q with deg Q <= deg P <= max_deg; f, g from {X^2, X^3, X^2+X}.
MNInstance random_mn_instance(std::mt19937& rng, int max_deg = 5);

}  // namespace dls::gen
