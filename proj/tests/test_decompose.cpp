#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "dls/decompose.hpp"
#include "dls/families.hpp"
#include "dls/parse.hpp"

using namespace dls;

namespace {

UniPoly P(const std::string& s, const NumberField& K = rationals()) { return parse_uni(s, K); }

// Independent enumeration: recurse over all canonical right factors.
std::set<std::vector<UniPoly>> chains_recursive(const UniPoly& f) {
  std::set<std::vector<UniPoly>> out;
  int n = f.degree();
  for (int d = 2; d < n; ++d) {
    if (n % d) continue;
    auto rf = right_factor(f, d);
    if (!rf || !is_indecomposable(rf->second)) continue;
    for (auto c : chains_recursive(rf->first)) {
      c.push_back(rf->second);
      out.insert(c);
    }
  }
  if (out.empty()) out.insert({f});
  return out;
}

std::set<std::vector<UniPoly>> as_set(const std::vector<Decomposition>& ds) {
  std::set<std::vector<UniPoly>> s;
  for (auto& d : ds) s.insert(d.factors);
  return s;
}

bool lin_equiv(const UniPoly& a, const UniPoly& b) {
  return a.degree() == b.degree() && (a.degree() < 2 || linearly_related(a, b, false).has_value());
}

UniPoly random_poly(std::mt19937& rng, int d) {
  std::uniform_int_distribution<int> c(-5, 5);
  QVec v;
  for (int i = 0; i < d; ++i) v.push_back(c(rng));
  v.push_back(1 + rng() % 3);
  return UniPoly(rationals(), v);
}

}  // namespace

TEST_CASE("right_factor") {
  auto r = right_factor(P("x^6"), 2);
  REQUIRE(r);
  CHECK(r->first == P("x^3"));
  CHECK(r->second == P("x^2"));
  r = right_factor(P("x^4-4x^2+2"), 2);
  REQUIRE(r);
  CHECK(r->first == P("x^2-4x+2"));
  CHECK(r->second == P("x^2"));
  CHECK_FALSE(right_factor(P("x^6+x"), 2));
  CHECK_THROWS_AS(right_factor(P("x^6"), 4), Error);
}

TEST_CASE("complete_decompositions") {
  UniPoly t12 = chebyshev(12);
  auto ds = complete_decompositions(t12);
  REQUIRE(ds.size() == 3);
  std::set<std::vector<int>> degs;
  for (auto& d : ds) {
    degs.insert(d.degrees());
    CHECK(d.expand() == t12);
    for (auto& f : d.factors) CHECK(lin_equiv(f, chebyshev(f.degree())));
  }
  CHECK(degs == std::set<std::vector<int>>{{2, 2, 3}, {2, 3, 2}, {3, 2, 2}});

  UniPoly f = P("x^6+2x^4+x^2");
  ds = complete_decompositions(f);
  REQUIRE(ds.size() == 2);
  CHECK(ds[0].factors == std::vector<UniPoly>{P("x^2"), P("x^3+x")});
  CHECK(ds[1].factors == std::vector<UniPoly>{P("x(x+1)^2"), P("x^2")});

  ds = complete_decompositions(P("x^5"));
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].factors.size() == 1);
}

TEST_CASE("BFS agrees with recursive enumeration") {
  std::vector<UniPoly> inputs{chebyshev(12), chebyshev(30), P("x^12"), P("x^6+2x^4+x^2"),
                              compose(P("x^2+3x"), compose(P("x^3+x"), P("x^2+x"))),
                              compose(P("x^3"), P("x^2(x+1)")), dickson(18, NFElement(rationals(), 3))};
  for (auto& f : inputs) {
    auto ds = complete_decompositions(f);
    CHECK(as_set(ds) == chains_recursive(f));
    for (auto& d : ds) CHECK(d.expand() == f);
  }
}

TEST_CASE("Ritt invariance") {
  for (auto f : {chebyshev(12), chebyshev(30), P("x^30"), compose(P("x^3"), P("x^2(x+1)"))}) {
    auto ds = complete_decompositions(f);
    auto ref = ds[0].degrees();
    std::sort(ref.begin(), ref.end());
    for (auto& d : ds) {
      auto dg = d.degrees();
      std::sort(dg.begin(), dg.end());
      CHECK(dg == ref);
    }
    if (ds.size() < 2) continue;
    // Each chain has a neighbour differing at one adjacent coprime pair.
    for (auto& a : ds) {
      bool has = false;
      for (auto& b : ds) {
        std::vector<size_t> diff;
        for (size_t i = 0; i < a.factors.size(); ++i)
          if (a.factors[i] != b.factors[i]) diff.push_back(i);
        if (diff.size() == 2 && diff[1] == diff[0] + 1 &&
            std::gcd(a.factors[diff[0]].degree(), a.factors[diff[1]].degree()) == 1)
          has = true;
      }
      CHECK(has);
    }
  }
}

TEST_CASE("prime degree gives one chain") {
  std::mt19937 rng(5);
  for (int d : {2, 3, 5, 7, 11}) {
    auto ds = complete_decompositions(random_poly(rng, d));
    CHECK(ds.size() == 1);
    CHECK(ds[0].factors.size() == 1);
  }
}

TEST_CASE("round trip on random decomposable inputs") {
  std::mt19937 rng(17);
  for (int it = 0; it < 30; ++it) {
    int dg = 2 + rng() % 3, dh = 2 + rng() % 3;
    UniPoly g = random_poly(rng, dg), h = random_poly(rng, dh);
    UniPoly f = compose(g, h);
    auto rf = right_factor(f, dh);
    REQUIRE(rf);
    CHECK(rf->second == canonical_right(h));
    CHECK(compose(rf->first, rf->second) == f);
    for (auto& d : complete_decompositions(f)) CHECK(d.expand() == f);
  }
}

TEST_CASE("ritt_move") {
  auto m = ritt_move(P("x^2"), P("x^3"));
  REQUIRE(m);
  CHECK(m->first == P("x^3"));
  CHECK(m->second == P("x^2"));
  m = ritt_move(chebyshev(2), chebyshev(3));
  REQUIRE(m);
  CHECK(compose(m->first, m->second) == chebyshev(6));
  CHECK(lin_equiv(m->first, chebyshev(3)));
  CHECK(lin_equiv(m->second, chebyshev(2)));
  CHECK_FALSE(ritt_move(P("x^2"), P("x^3-3x+1")));
}

TEST_CASE("right uniqueness") {
  CHECK_FALSE(is_right_unique(chebyshev(12), chebyshev(4)));
  CHECK(is_right_unique(P("x^4+x^2"), P("x^2")));
  CHECK(is_right_unique(P("x^9"), P("x^3")));
  CHECK_THROWS_AS(is_right_unique(P("x^4+x"), P("x^2")), Error);
  CHECK_FALSE(is_strongly_unique(P("x^9"), P("x^3")));
  CHECK_FALSE(is_strongly_unique(chebyshev(9), chebyshev(3)));
  CHECK(is_strongly_unique(compose(P("x^3+x"), P("x^3")), P("x^3")));
  // every decomposable quartic is linearly related to some D_{4,alpha}
  CHECK_FALSE(is_strongly_unique(P("x^4+x^2"), P("x^2")));
}

TEST_CASE("recognize_power") {
  auto w = recognize_power(P("2(x-1)^3+5"));
  REQUIRE(w);
  CHECK(w->mu.poly() == P("2x+5"));
  CHECK(w->n == 3);
  CHECK(w->nu.poly() == P("x-1"));
  CHECK_FALSE(recognize_power(P("x^3-3x")));
  w = recognize_power(P("x^2"));
  REQUIRE(w);
  CHECK(w->mu.is_identity());
  CHECK(w->nu.is_identity());
}

TEST_CASE("recognize_dickson") {
  auto w = recognize_dickson(P("x^4-4x^2+2"));
  REQUIRE(w);
  CHECK(w->mu.is_identity());
  CHECK(w->alpha == NFElement(rationals(), 1));
  CHECK(w->nu.is_identity());
  w = recognize_dickson(P("-1/4x^4+2x^2-2"));
  REQUIRE(w);
  CHECK(w->mu.poly() == P("-1/4x"));
  CHECK(w->alpha == NFElement(rationals(), 2));
  CHECK_FALSE(recognize_dickson(P("x^4+x")));
  CHECK_FALSE(recognize_dickson(P("x^5")));

  std::mt19937 rng(23);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int n = 2; n <= 12; ++n)
    for (int i = 0; i < 20; ++i) {
      int num = c(rng);
      if (num == 0) num = 7;
      mpq_class q(num, 1 + rng() % 4);
      q.canonicalize();
      NFElement alpha(rationals(), q);
      auto r = recognize_dickson(dickson(n, alpha));
      REQUIRE(r);
      CHECK(r->mu.is_identity());
      CHECK(r->nu.is_identity());
      CHECK(r->alpha == alpha);
      // with linear maps around it
      LinearMap mu{NFElement(rationals(), 3), NFElement(rationals(), -2)};
      LinearMap nu{NFElement(rationals(), 1), NFElement(rationals(), 5)};
      UniPoly g = apply_left(mu, apply_right(dickson(n, alpha), nu));
      auto r2 = recognize_dickson(g);
      REQUIRE(r2);
      CHECK(apply_left(r2->mu, apply_right(dickson(n, r2->alpha), r2->nu)) == g);
    }
}

TEST_CASE("left_factors") {
  auto lf = left_factors(P("x^4"));
  REQUIRE(lf.size() == 2);
  CHECK(lf[0] == std::make_pair(P("x^4"), P("x")));
  CHECK(lf[1] == std::make_pair(P("x^2"), P("x^2")));
  lf = left_factors(chebyshev(6));
  REQUIRE(lf.size() == 3);
  CHECK(lf[1].first.degree() == 3);
  CHECK(lin_equiv(lf[1].first, chebyshev(3)));
  CHECK(lin_equiv(lf[2].first, chebyshev(2)));
  for (auto& [h, h1] : lf) CHECK(compose(h, h1) == chebyshev(6));
  CHECK(left_factors(P("x^5+x")).size() == 1);
}

TEST_CASE("linearly_related") {
  auto w = linearly_related(P("(x+1)^2"), P("x^2"), false);
  REQUIRE(w);
  CHECK(w->mu.is_identity());
  CHECK(w->nu.poly() == P("x+1"));
  CHECK_FALSE(linearly_related(chebyshev(4), P("x^4"), false));
  w = linearly_related(P("2x^3-6x+1"), chebyshev(3), false);
  REQUIRE(w);
  CHECK(w->mu.poly() == P("2x+1"));
  CHECK(w->nu.is_identity());
  CHECK_FALSE(linearly_related(P("2x^3-6x+1"), chebyshev(3), true));
  // scale only visible over Q(sqrt2)
  NumberField R = parse_field("r^2-2", "r");
  UniPoly t4 = chebyshev(4, R);
  UniPoly g = dickson(4, NFElement(R, 2)) * NFElement(R, mpq_class(-1, 4));
  CHECK_FALSE(linearly_related(-chebyshev(4), P("-1/4x^4+2x^2-2"), true));
  auto all = linearly_related_all(-t4, g, true);
  CHECK(all.size() == 2);
  for (auto& x : all) CHECK(apply_right(g, x.nu) == -t4);
  // pure powers: the scale comes from the leading coefficients
  auto pw = linearly_related(P("4x^2-2"), P("25x^2+30x+7"), true);
  REQUIRE(pw);
  CHECK(apply_right(P("25x^2+30x+7"), pw->nu) == P("4x^2-2"));
  CHECK_FALSE(linearly_related(P("2x^2"), P("x^2"), true));
  CHECK(linearly_related(P("2x^2"), P("x^2"), false));
}
