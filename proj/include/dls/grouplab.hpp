#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dls/group.hpp"
#include "dls/unipoly.hpp"

namespace dls {

enum class WreathAction { Imprimitive, Product };

// A wr B: imprimitive on m*d points (point i*m + j is j in block i), or product action on m^d points.
PermGroup wreath(const PermGroup& A, const PermGroup& B, WreathAction action, int max_points = 4096);

bool is_diagonal_subdirect(const PermGroup& K, const std::vector<std::vector<int>>& blocks);

// Subspace of F_q^dim, optionally with a group permuting coordinates.
struct ElemAbelianModule {
  int q = 2;
  int dim = 0;
  std::vector<std::vector<int>> basis;  // reduced echelon form
  std::optional<PermGroup> acting;

  static ElemAbelianModule span(int q, int dim, const std::vector<std::vector<int>>& vs);
  int rank() const { return static_cast<int>(basis.size()); }
  uint64_t size() const;
  bool contains(const std::vector<int>& v) const;
  std::vector<std::vector<int>> elements() const;
  bool closed_under_action() const;
};

ElemAbelianModule augmentation_module(int d, int q);

// Blocks are consecutive runs of q points (AGL_1(q)) or 4 points (S_4 = AGL_2(2), points as bit pairs).
enum class SocleContext { AGL1, S4 };
struct SocleResult {
  ElemAbelianModule module;  // coordinates: translation part per block
  PermGroup group;
};
SocleResult socle_solvable(const PermGroup& K, SocleContext ctx, int q);

PermGroup agl1(int q);
// Element of AGL_1(q) wr S_d: x in block i goes to a_i x + b_i in block pi(i).
Perm affine_wreath_element(int q, const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& pi);
// Translation by t_i on block i.
Perm base_translation(int q, const std::vector<int>& t);

struct IndexReport {
  bool ok = true;
  uint64_t gq = 0, nq = 0, index = 0;
  bool full_cycle_case = false;
  std::vector<std::string> checks;
};
IndexReport verify_index_lemma(const PermGroup& G, const PermGroup& N, const Perm& sigma, int q, int d);

int nilpotency_class(const PermGroup& Q);

struct LargenessReport {
  bool large = false;
  bool full_power = false;       // soc^p in the kernel
  bool cyclic_corank1 = false;   // soc cyclic and the kernel meets soc^p in index <= |soc|
  uint64_t kernel_order = 0;
  uint64_t socle_order = 0;
  int kernel_socle_rank = 0;
  std::string exception;  // "GL2(3)" or "C3xS4" when the group matches a named exception
};
// G2 of degree p*q with p blocks of size q.
LargenessReport largeness_check(const PermGroup& G2, int p, int q);

bool two_action_reducibility(const PermGroup& G, const PermGroup& H1, const PermGroup& H2);

struct Deg8Group {
  PermGroup group;
  uint64_t order = 0;
  int block_systems = 0;
  std::vector<int> block_sizes;
  bool solvable = false;
  bool primitive = false;
  uint64_t abelianization = 0;
  std::string fingerprint() const;
};
// Subgroups of S_8 containing (0 1 2 3 4 5 6 7), one per conjugacy class.
std::vector<Deg8Group> enumerate_deg8_full_cycle(int threads = 1);

struct Deg8ScanReport {
  int groups_scanned = 0;
  int configurations = 0;
  int reducible = 0;
  int survivors = 0;
  std::vector<std::string> survivor_details;
};
// Two faithful degree-8 actions of a solvable H, both with blocks of size 2 and a common 8-cycle;
// a survivor is a reducible configuration whose proper overgroup pairs are all irreducible.
Deg8ScanReport deg8_minimal_reducibility_scan(const std::vector<Deg8Group>& groups, int threads = 1);

struct ProbeSample {
  uint64_t p;
  long a;
  std::vector<int> type;
};
struct ProbeReport {
  std::map<std::vector<int>, int> types;
  std::vector<ProbeSample> samples;
  std::vector<std::pair<std::string, bool>> consistent;
};
// With geometric set, only primes p = 1 mod 2n are used, so constant-field effects are split.
ProbeReport monodromy_probe(const UniPoly& f, int trials, uint64_t seed,
                            const std::vector<std::pair<std::string, PermGroup>>& candidates = {},
                            bool geometric = true);

}  // namespace dls
