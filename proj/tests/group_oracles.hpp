#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "dls/grouplab.hpp"

namespace dls::oracle {

// Product of minimal normal subgroups, minimality tested against all normal closures.
inline PermGroup socle_oracle(const PermGroup& K) {
  std::vector<PermGroup> closures;
  for (auto& x : K.elements())
    if (!x.is_identity()) closures.push_back(normal_closure(K, {x}));
  std::vector<Perm> gens;
  for (auto& c : closures) {
    bool minimal = true;
    for (auto& d : closures)
      if (d.order() < c.order() && d.is_subgroup_of(c)) minimal = false;
    if (minimal) gens.insert(gens.end(), c.generators().begin(), c.generators().end());
  }
  return PermGroup(K.degree(), gens);
}

inline int base_rank(const PermGroup& H, int q, int d) {
  int count = 0;
  std::vector<int> t(d, 0);
  while (true) {
    if (H.contains(base_translation(q, t))) ++count;
    int i = 0;
    while (i < d && ++t[i] == q) t[i++] = 0;
    if (i == d) break;
  }
  int r = 0;
  while (count > 1) count /= q, ++r;
  return r;
}

struct IndexInstance {
  PermGroup G, N;
  Perm sigma;
  int q, d;
};

// G inside AGL_1(q) wr S_d containing sigma over a d-cycle with sigma^d in the base; N = G or the normal closure.
inline IndexInstance random_index_instance(std::mt19937_64& rng, int trial) {
  int qs[] = {2, 3, 5};
  int q = qs[trial % 3];
  int d = 1 + static_cast<int>(rng() % 5);
  std::vector<int> cyc(d);
  std::iota(cyc.begin(), cyc.end(), 0);
  std::shuffle(cyc.begin(), cyc.end(), rng);
  std::vector<int> pi(d);
  for (int i = 0; i < d; ++i) pi[cyc[i]] = cyc[(i + 1) % d];
  std::vector<int> a(d), b(d);
  int prod = 1;
  for (int i = 0; i < d; ++i) {
    a[i] = 1 + static_cast<int>(rng() % (q - 1));
    b[i] = static_cast<int>(rng() % q);
    if (i + 1 < d) prod = prod * a[i] % q;
  }
  for (int x = 1; x < q; ++x)
    if (prod * x % q == 1) a[d - 1] = x;
  Perm sigma = affine_wreath_element(q, a, b, pi);
  std::vector<Perm> gens{sigma};
  int extra = static_cast<int>(rng() % 3);
  for (int i = 0; i < extra; ++i) {
    std::vector<int> p(d), ea(d), eb(d);
    std::iota(p.begin(), p.end(), 0);
    if (rng() % 2) std::shuffle(p.begin(), p.end(), rng);
    for (int j = 0; j < d; ++j) {
      ea[j] = 1 + static_cast<int>(rng() % (q - 1));
      eb[j] = static_cast<int>(rng() % q);
    }
    gens.push_back(affine_wreath_element(q, ea, eb, p));
  }
  PermGroup G(q * d, gens);
  PermGroup N = rng() % 2 ? normal_closure(G, {sigma}) : G;
  return {G, N, sigma, q, d};
}

}  // namespace dls::oracle
