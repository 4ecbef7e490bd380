#include <doctest.h>

#include <random>

#include "dls/factor.hpp"
#include "dls/parse.hpp"

using namespace dls;

namespace {

NumberField QQ() { return rationals(); }
UniPoly P(const std::string& s, const NumberField& K = rationals()) { return parse_uni(s, K); }

// Rational root test by candidate enumeration; decides irreducibility in degree <= 3.
bool has_rational_root(const UniPoly& f) {
  QVec c = f.rational_coeffs();
  mpz_class l = 1;
  for (auto& q : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> z;
  for (auto& q : c) z.push_back(mpz_class(q * l));
  if (z[0] == 0) return true;
  auto divisors = [](mpz_class v) {
    std::vector<mpz_class> d;
    v = abs(v);
    for (mpz_class k = 1; k * k <= v; ++k)
      if (v % k == 0) {
        d.push_back(k);
        d.push_back(v / k);
      }
    return d;
  };
  for (auto& p : divisors(z.front()))
    for (auto& q : divisors(z.back()))
      for (int s : {1, -1}) {
        mpq_class r(p * s, q);
        r.canonicalize();
        if (f.eval(NFElement(f.field(), r)).is_zero()) return true;
      }
  return false;
}

}  // namespace

TEST_CASE("poly_arith examples") {
  CHECK(gcd(P("x^2-1"), P("x^2-2x+1")) == P("x-1"));
  auto [q, r] = divmod(P("x^3"), P("x-1"));
  CHECK(q == P("x^2+x+1"));
  CHECK(r == P("1"));
  CHECK(P("x^4-4x^2+2").derivative() == P("4x^3-8x"));
  CHECK(P("x^2+1").eval(NFElement(QQ(), 3)) == NFElement(QQ(), 10));
  CHECK_THROWS_AS(divmod(P("x"), UniPoly(QQ())), Error);
  NumberField K = parse_field("a^2+a+2");
  CHECK_THROWS_AS(P("x") + P("x", K), Error);
}

TEST_CASE("parse and print") {
  NumberField K = parse_field_decl("a: a^2+a+2");
  UniPoly f = parse_uni("x^4 - 4*a*x^2 + 2*a^2", K);
  CHECK(f.degree() == 4);
  CHECK(f.coeff(0) == NFElement(K, QVec{-4, -2}));
  CHECK(parse_uni(f.str(), K) == f);
  CHECK(P("1/2 x^2 - 3").str() == "1/2*x^2 - 3");
  CHECK_THROWS_AS(P("x^"), Error);
  CHECK_THROWS_AS(P("x/x"), Error);
  CHECK_THROWS_AS(P("y+1"), Error);
}

TEST_CASE("compose") {
  CHECK(compose(P("x^2-2"), P("x^2-2")) == P("x^4-4x^2+2"));
  UniPoly f = P("3x^5-x+7");
  CHECK(compose(P("x"), f) == f);
  CHECK(compose(P("x^3"), P("x^2")) == P("x^6"));
  CHECK(compose(P("x^3+x"), P("2x^2-1")).degree() == 6);
}

TEST_CASE("squarefree_decomposition") {
  auto sq = squarefree_decomposition(P("(x-1)^2(x+2)"));
  REQUIRE(sq.factors.size() == 2);
  CHECK(sq.factors[0].first == P("x+2"));
  CHECK(sq.factors[0].second == 1);
  CHECK(sq.factors[1].first == P("x-1"));
  CHECK(sq.factors[1].second == 2);
  sq = squarefree_decomposition(P("x^5"));
  REQUIRE(sq.factors.size() == 1);
  CHECK(sq.factors[0].second == 5);
  sq = squarefree_decomposition(P("x^2+1"));
  REQUIRE(sq.factors.size() == 1);
  CHECK(sq.factors[0].first == P("x^2+1"));
}

TEST_CASE("factor_q examples") {
  auto fl = factor_q(P("x^4+4"));
  REQUIRE(fl.factors.size() == 2);
  CHECK(fl.factors[0].first == P("x^2-2x+2"));
  CHECK(fl.factors[1].first == P("x^2+2x+2"));
  CHECK(is_irreducible(P("x^2-2")));
  fl = factor_q(P("x^6-1"));
  REQUIRE(fl.factors.size() == 4);
  CHECK(fl.expand() == P("x^6-1"));
  CHECK(fl.factors[0].first.degree() == 1);
  CHECK(fl.factors[3].first.degree() == 2);
  fl = factor_q(P("6x^3 - 6"));
  CHECK(fl.unit == NFElement(QQ(), 6));
  CHECK(fl.expand() == P("6x^3-6"));
}

TEST_CASE("factor_q harder inputs") {
  // Swinnerton-Dyer polynomial for sqrt2, sqrt3: irreducible, splits mod every prime.
  CHECK(is_irreducible(P("x^4-10x^2+1")));
  UniPoly big = P("(x^8-3x^5+2x+1)(x^8+x^7-5)(x^3-2)^2(2x-3)");
  auto fl = factor_q(big);
  CHECK(fl.expand() == big);
  CHECK(fl.factors.size() == 4);
  CHECK(is_irreducible(P("x^16+x^15-7x^3+1")) == (factor_q(P("x^16+x^15-7x^3+1")).factors.size() == 1));
  UniPoly cyc = P("x^24-1");
  CHECK(factor_q(cyc).factors.size() == 8);
}

TEST_CASE("factor_nf examples") {
  NumberField K = parse_field("a^2+a+2");
  auto fl = factor_nf(P("x^2+x+2", K));
  REQUIRE(fl.factors.size() == 2);
  CHECK(fl.expand() == P("x^2+x+2", K));
  bool has_a = false, has_conj = false;
  for (auto& [p, m] : fl.factors) {
    if (p == P("x-a", K)) has_a = true;
    if (p == P("x+1+a", K)) has_conj = true;
  }
  CHECK(has_a);
  CHECK(has_conj);
  NumberField R = parse_field("r^2-2", "r");
  fl = factor_nf(P("x^2-2", R));
  REQUIRE(fl.factors.size() == 2);
  CHECK(fl.factors[0].first * fl.factors[1].first == P("x^2-2", R));
  CHECK(is_irreducible(P("x^2+1", R)));
  // x^2+1 over Q(sqrt2): a root u+v*r would need u^2+2v^2+1=0 or uv=0 cases, none rational.
  CHECK(roots_in_field(P("x^2+1", R)).empty());
}

TEST_CASE("rational_roots") {
  auto r = rational_roots(P("x^2-4"));
  REQUIRE(r.size() == 2);
  CHECK(r[0] == -2);
  CHECK(r[1] == 2);
  r = rational_roots(P("2x-1"));
  REQUIRE(r.size() == 1);
  CHECK(r[0] == mpq_class(1, 2));
  CHECK(rational_roots(P("x^2+1")).empty());
  r = rational_roots(P("(x-3)^2(x+1/3)"));
  CHECK(r.size() == 3);
}

TEST_CASE("critical values") {
  UniPoly c = critical_value_poly(P("x^2"));
  CHECK(c == P("x"));
  UniPoly t4 = P("x^4-4x^2+2");
  CHECK(squarefree_part(critical_value_poly(t4)) == P("x^2-4"));
  CHECK(squarefree_part(critical_value_poly(P("x^3-3x"))) == P("x^2-4"));
  // independent: critical values are f at roots of f'
  UniPoly f = P("x^3-3x");
  CHECK(f.eval(NFElement(QQ(), 1)) == NFElement(QQ(), -2));
  CHECK(f.eval(NFElement(QQ(), -1)) == NFElement(QQ(), 2));
  CHECK(simply_branched(P("x^3-3x")));
  CHECK_FALSE(simply_branched(P("x^3")));
  CHECK_FALSE(simply_branched(t4));
  CHECK(branch_loci_equal(t4, -t4));
  CHECK(branch_loci_equal(P("x^2"), P("x^3")));
  CHECK_FALSE(branch_loci_equal(P("x^2"), P("x^2+1")));
  CHECK_THROWS_AS(critical_value_poly(P("x+1")), Error);
}

TEST_CASE("factorization expands back (random)") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> cd(-5, 5), dd(1, 4), nf(1, 3);
  NumberField K = parse_field("a^2+a+2");
  for (int it = 0; it < 200; ++it) {
    bool over_k = it % 4 == 3;
    const NumberField& F = over_k ? K : rationals();
    UniPoly f = UniPoly::constant(NFElement(F, cd(rng) == 0 ? 3 : 1 + (it % 3)));
    int parts = nf(rng), total = 0;
    for (int k = 0; k < parts && total < 12; ++k) {
      int d = std::min(dd(rng), 12 - total);
      std::vector<NFElement> c;
      for (int i = 0; i < d; ++i) {
        NFElement e(F, cd(rng));
        if (over_k && i == 0) e += NFElement::generator(F) * NFElement(F, cd(rng));
        c.push_back(e);
      }
      c.emplace_back(F, 1 + (rng() % 3));
      f *= UniPoly(F, c);
      total += d;
    }
    if (f.degree() < 1) continue;
    FactorList fl = factor(f);
    CHECK(fl.expand() == f);
    for (auto& [p, m] : fl.factors) {
      CHECK(p.lc().is_one());
      if (!over_k && p.degree() >= 2 && p.degree() <= 3) CHECK_FALSE(has_rational_root(p));
      if (p.degree() >= 2) CHECK(roots_in_field(p).empty());
    }
    for (size_t i = 0; i + 1 < fl.factors.size(); ++i)
      CHECK(fl.factors[i].first != fl.factors[i + 1].first);
  }
}
