#include "dls/generators.hpp"

#include "dls/classifier.hpp"

namespace dls::gen {

UniPoly random_poly(std::mt19937& rng, int d, int height) {
  std::uniform_int_distribution<int> c(-height, height);
  QVec v;
  for (int i = 0; i < d; ++i) v.push_back(c(rng));
  int lead = 0;
  while (lead == 0) lead = c(rng);
  v.push_back(lead);
  return UniPoly(rationals(), v);
}

LinearMap random_linear(std::mt19937& rng, int height) {
  UniPoly l = random_poly(rng, 1, height);
  return {l.coeff(1), l.coeff(0)};
}

Pair theorem_pair(std::mt19937& rng, int max_deg) {
  const NumberField Q = rationals();
  switch (rng() % 3) {
    case 0: {
      int dh = 2 + rng() % 3;
      UniPoly h = random_poly(rng, dh, 5);
      int lim = max_deg / dh;
      UniPoly f1 = random_poly(rng, 1 + rng() % lim, 5), g1 = random_poly(rng, 1 + rng() % lim, 5);
      return {compose(h, f1), compose(h, g1), 1};
    }
    case 1: {
      if (max_deg >= 7) {
        NamedPair p = exceptional_pair(rng() % 2 ? PairTag::Deg7_237 : PairTag::Deg7_247);
        const NumberField& L = p.field;
        LinearMap mu = random_linear(rng, 3), lam = random_linear(rng, 3);
        mu = {NFElement(L, mu.a.rational()), NFElement(L, mu.b.rational())};
        lam = {NFElement(L, lam.a.rational()), NFElement(L, lam.b.rational())};
        int lim = max_deg / 7;
        UniPoly f1 = random_poly(rng, 1 + rng() % lim, 3).over(L), g1 = random_poly(rng, 1 + rng() % lim, 3).over(L);
        UniPoly a = apply_left(mu, compose(p.h1, compose(lam.poly(), f1)));
        UniPoly b = apply_left(mu, compose(p.h2, compose(lam.poly(), g1)));
        if (rng() % 2) std::swap(a, b);
        return {a, b, 2};
      }
      [[fallthrough]];
    }
    default: {
      LinearMap mu = random_linear(rng, 5);
      NFElement alpha(Q, static_cast<long>(rng() % 7) - 3);
      UniPoly a = apply_left(mu, dickson(4, alpha));
      UniPoly b = apply_left(mu, dickson(4, alpha * NFElement(Q, 2)) * NFElement(Q, mpq_class(-1, 4)));
      int lim = max_deg / 4;
      UniPoly f1 = random_poly(rng, 1 + rng() % lim, 3), g1 = random_poly(rng, 1 + rng() % lim, 3);
      if (rng() % 2) std::swap(a, b);
      return {compose(a, f1), compose(b, g1), 3};
    }
  }
}

MNInstance random_mn_instance(std::mt19937& rng, int max_deg) {
  std::vector<UniPoly> fs{UniPoly::monomial(NFElement(rationals(), 1), 2), UniPoly::monomial(NFElement(rationals(), 1), 3),
                          UniPoly(rationals(), QVec{mpq_class(0), mpq_class(1), mpq_class(1)})};
  while (true) {
    int n = 3 + static_cast<int>(rng() % (max_deg - 2));
    int m = 2 + static_cast<int>(rng() % (n - 1));
    UniPoly P = random_poly(rng, n, 4), Q = random_poly(rng, m, 4);
    if (mn_hypothesis_failure(P, Q)) continue;
    return {P, Q, fs[rng() % 3], fs[rng() % 3]};
  }
}

}  // namespace dls::gen
