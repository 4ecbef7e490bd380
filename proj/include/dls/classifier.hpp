#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dls/bipoly.hpp"
#include "dls/decompose.hpp"
#include "dls/families.hpp"

namespace dls {

enum class CaseKind { Irreducible, CommonLeftFactor, DicksonPair, ExceptionalPair, ExceptionalDegreeFlag, Inconsistent };
const char* case_name(CaseKind k);

struct Verdict {
  bool reducible = false;
  CaseKind kind = CaseKind::Irreducible;
  NumberField field;  // where f, g and the witness live
  bool swapped = false;  // witness describes (g, f)
  // CommonLeftFactor: f = h∘f1, g = h∘g1.
  // DicksonPair: f = mu∘D_{4,alpha}∘f1, g = mu∘(-1/4 D_{4,2alpha})∘g1.
  // ExceptionalPair: f = mu∘h1∘lambda∘f1, g = mu∘h2∘lambda∘g1.
  UniPoly h, f1, g1;
  LinearMap mu, lambda;
  NFElement alpha;
  PairTag tag = PairTag::Dickson4;
  int flag_degree = 0;
  UniPoly flag_f, flag_g;
  std::string details;
  BiFactorList oracle;
};

Verdict classify(const UniPoly& f, const UniPoly& g);
// Substitutes the witness back; true iff it reproduces f and g.
bool verify_witness(const Verdict& v, const UniPoly& f, const UniPoly& g);

// Fields tried when reducibility over K = Q is not found.
std::vector<NumberField> extension_list();
struct GeometricVerdict {
  Verdict verdict;
  std::vector<std::string> fields_tried;
};
GeometricVerdict classify_with_extensions(const UniPoly& f, const UniPoly& g);

struct SubpairCheck {
  UniPoly f, g;
  bool reducible;
};
struct MinRedCertificate {
  UniPoly f, g;  // the minimally reducible left factors
  BiFactorList factors;
  std::vector<SubpairCheck> subpairs;  // all proper left-factor subpairs, each irreducible
  bool equal_degrees;
  bool branch_loci_equal;
};
std::optional<MinRedCertificate> minimal_reducible_refinement(const UniPoly& f, const UniPoly& g);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> checks;
  void add(const std::string& name, bool pass, const std::string& detail = "");
};
// case 1: (m, n, d); case 2: {1, a, b}, {2} or {3}; case 3: {237}, {247} or {2313}.
CheckReport genus0_reduced_check(int case_id, const std::vector<int>& params);

// First violated hypothesis of the (m,n)-problem statement, if any.
std::optional<std::string> mn_hypothesis_failure(const UniPoly& P, const UniPoly& Q);
bool mn_problem_check(const UniPoly& P, const UniPoly& Q, const UniPoly& f, const UniPoly& g);

}  // namespace dls
