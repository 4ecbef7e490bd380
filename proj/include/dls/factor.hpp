#pragma once

#include <utility>
#include <vector>

#include "dls/unipoly.hpp"

namespace dls {

struct FactorList {
  NFElement unit;
  std::vector<std::pair<UniPoly, int>> factors;  // monic irreducible, multiplicity

  UniPoly expand() const;
  int count_with_multiplicity() const;
};

// Yun: f = lc * prod a_i^i with a_i monic squarefree, pairwise coprime.
FactorList squarefree_decomposition(const UniPoly& f);
UniPoly squarefree_part(const UniPoly& f);
bool is_squarefree(const UniPoly& f);

FactorList factor_q(const UniPoly& f);
FactorList factor_nf(const UniPoly& f);
// Dispatches on the coefficient field.
FactorList factor(const UniPoly& f);
bool is_irreducible(const UniPoly& f);

std::vector<mpq_class> rational_roots(const UniPoly& f);
// Distinct roots in the coefficient field.
std::vector<NFElement> roots_in_field(const UniPoly& f);

// Norm N(x) = prod over embeddings of f; polynomial over Q.
UniPoly norm_poly(const UniPoly& f);

// Monic generator of the critical values: Res_X(f(X) - T, f'(X)) up to units.
UniPoly critical_value_poly(const UniPoly& f);
bool simply_branched(const UniPoly& f);
bool branch_loci_equal(const UniPoly& f, const UniPoly& g);

}  // namespace dls
