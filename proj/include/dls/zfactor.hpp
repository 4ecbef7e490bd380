#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dls/qpoly.hpp"

namespace dls {

struct ZFactorization {
  mpz_class content;  // signed
  std::vector<std::pair<ZVec, int>> factors;  // primitive, positive lc
};

// Irreducible factors of a primitive squarefree f with positive leading coefficient.
std::vector<ZVec> zassenhaus(const ZVec& f);

// Full factorization over Z of a nonzero polynomial.
ZFactorization factor_z(const ZVec& f);

// Yun decomposition over Q: returns (a_i, i) with f = lc * prod a_i^i, a_i monic.
std::vector<std::pair<QVec, int>> yun_q(const QVec& f);

bool is_irreducible_z(const ZVec& f);

// Degrees of the irreducible factors of f mod p (f squarefree mod p, p odd prime not dividing lc).
std::vector<int> degree_pattern_mod_p(const ZVec& f, uint64_t p);
bool squarefree_mod_p(const ZVec& f, uint64_t p);

}  // namespace dls
