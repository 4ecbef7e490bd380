#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dls/unipoly.hpp"

namespace dls {

// a*X + b
struct LinearMap {
  NFElement a, b;

  static LinearMap identity(const NumberField& K) { return {NFElement(K, 1), NFElement(K)}; }
  UniPoly poly() const { return UniPoly::linear(a, b); }
  LinearMap inverse() const { return {a.inv(), -b / a}; }
  bool is_identity() const { return a.is_one() && b.is_zero(); }
  NFElement operator()(const NFElement& x) const { return a * x + b; }
  bool operator==(const LinearMap& o) const { return a == o.a && b == o.b; }
};

// this∘o
LinearMap operator*(const LinearMap& l, const LinearMap& o);
UniPoly apply_left(const LinearMap& mu, const UniPoly& f);   // mu∘f
UniPoly apply_right(const UniPoly& f, const LinearMap& nu);  // f∘nu

struct Decomposition {
  std::vector<UniPoly> factors;          // leftmost first
  std::vector<LinearMap> normalization;  // inserted between consecutive factors
  UniPoly expand() const;
  std::vector<int> degrees() const;
  bool operator==(const Decomposition& o) const { return factors == o.factors; }
  bool operator<(const Decomposition& o) const;
};

// Canonical right-factor form: monic with zero constant term.
UniPoly canonical_right(const UniPoly& h);

std::optional<std::pair<UniPoly, UniPoly>> right_factor(const UniPoly& f, int d);
bool is_indecomposable(const UniPoly& f);
Decomposition greedy_decomposition(const UniPoly& f);
std::vector<Decomposition> complete_decompositions(const UniPoly& f);
std::optional<std::pair<UniPoly, UniPoly>> ritt_move(const UniPoly& g, const UniPoly& h);
bool is_right_unique(const UniPoly& f, const UniPoly& v);
// Right-unique and no right factor of degree p^2 linearly related to X^{p^2} or T_{p^2}.
bool is_strongly_unique(const UniPoly& f, const UniPoly& v);

struct PowerWitness {
  LinearMap mu;
  int n;
  LinearMap nu;
};
std::optional<PowerWitness> recognize_power(const UniPoly& f);

struct DicksonWitness {
  LinearMap mu;
  int n;
  NFElement alpha;
  LinearMap nu;
};
std::optional<DicksonWitness> recognize_dickson(const UniPoly& f);

// Pairs f = h∘h1 with deg h >= 2 and h1 canonical, ordered by deg h1.
std::vector<std::pair<UniPoly, UniPoly>> left_factors(const UniPoly& f);

struct LinearWitness {
  LinearMap mu, nu;
};
// f = mu∘g∘nu.
std::optional<LinearWitness> linearly_related(const UniPoly& f, const UniPoly& g, bool right_only);
std::vector<LinearWitness> linearly_related_all(const UniPoly& f, const UniPoly& g, bool right_only);

}  // namespace dls
