#pragma once

#include <string>
#include <vector>

#include "dls/bipoly.hpp"

namespace dls {

UniPoly chebyshev(int n, const NumberField& K = rationals());
UniPoly dickson(int n, const NFElement& alpha);

enum class PairTag { Deg7_237, Deg7_247, Deg13_2313, Dickson4 };
const char* tag_name(PairTag t);
PairTag parse_tag(const std::string& s);

struct NamedPair {
  UniPoly h1, h2;
  NumberField field;
  NFElement gamma;
  PairTag tag;
};

// Degree-13 generator: minimal polynomial of zeta+zeta^3+zeta^9.
QVec deg13_minpoly();
NumberField deg7_field();
NumberField deg13_field();
// The unique automorphism of order 2 of K (complex conjugation for the fields used here).
FieldMap conjugation(const NumberField& K);

// h1 for Deg13_2313 with the constant of the last linear factor as a parameter.
UniPoly deg13_h1(const mpq_class& shift);
NamedPair pair_from_h1(const UniPoly& h1, PairTag tag);
NamedPair exceptional_pair(PairTag tag);
NamedPair exceptional_pair_degree(int d);  // throws DataUnavailable for 11, 15, 21, 31
NamedPair dickson_pair(const NFElement& alpha);

UniPoly genus0_P1(int a, int b);
UniPoly genus0_P2();
UniPoly genus0_P3();

struct ChebyshevH {
  BiPoly H;
  NumberField field;
  NFElement c;  // 2cos(pi/d)
};
ChebyshevH chebyshev_H(int d);
// Field Q(2cos(pi/d)).
NumberField cos_field(int d);

struct FamilyReport {
  bool ok;
  std::vector<std::string> checks;  // "name: pass|fail detail"
};
FamilyReport verify_family(PairTag tag);

}  // namespace dls
