#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dls/error.hpp"

namespace dls {

// A bijection of {0,...,n-1}. Products compose right to left: (a*b)(x) = a(b(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);
  explicit Perm(std::vector<int> images);
  static Perm from_cycles(const std::string& text, int n);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }
  bool is_identity() const;
  Perm inverse() const;
  long order() const;
  std::vector<int> cycle_type() const;  // sorted ascending, fixed points included
  std::string str() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

 private:
  friend Perm operator*(const Perm& a, const Perm& b);
  std::vector<int> img_;
};

Perm operator*(const Perm& a, const Perm& b);
Perm pow(const Perm& a, long e);
Perm commutator(const Perm& a, const Perm& b);  // a b a^-1 b^-1
Perm conjugate(const Perm& g, const Perm& x);   // g x g^-1

struct StabChain;

class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(int n, std::vector<Perm> gens);
  static PermGroup trivial(int n);
  static PermGroup symmetric(int n);
  static PermGroup cyclic(int n);
  static PermGroup dihedral(int n);  // order 2n on n points
  static PermGroup from_cycles(const std::vector<std::string>& gens, int n);

  int degree() const { return n_; }
  const std::vector<Perm>& generators() const { return gens_; }
  uint64_t order() const;
  bool contains(const Perm& g) const;
  bool is_trivial() const { return order() == 1; }

  std::vector<std::vector<int>> orbits() const;
  bool is_transitive() const;
  // Smallest block containing seed (all points of seed in one block).
  std::vector<std::vector<int>> minimal_block_system(const std::vector<int>& seed) const;
  // All nontrivial block systems of a transitive group, by block size.
  std::vector<std::vector<std::vector<int>>> block_systems() const;
  // The nontrivial block system with smallest blocks, empty if primitive.
  std::vector<std::vector<int>> blocks() const;
  bool is_primitive() const;

  std::vector<PermGroup> derived_series() const;
  bool is_solvable() const;
  std::vector<Perm> elements(uint64_t limit = 1000000) const;

  PermGroup pointwise_stabilizer(const std::vector<int>& pts) const;
  bool is_subgroup_of(const PermGroup& G) const;
  bool is_normal_in(const PermGroup& G) const;
  bool operator==(const PermGroup& o) const;

 private:
  const StabChain& chain() const;
  int n_ = 0;
  std::vector<Perm> gens_;
  mutable std::shared_ptr<StabChain> chain_;
};

PermGroup generated(const PermGroup& G, const std::vector<Perm>& extra);
// Smallest normal subgroup of G containing X.
PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& X);
// [A, B] as a subgroup of <A, B>.
PermGroup commutator_subgroup(const PermGroup& A, const PermGroup& B);
std::vector<PermGroup> lower_central_series(const PermGroup& G);
PermGroup intersection(const PermGroup& A, const PermGroup& B);
PermGroup center(const PermGroup& G);
PermGroup sylow_subgroup(const PermGroup& G, int p);
bool is_p_group(const PermGroup& G, int p);

}  // namespace dls
