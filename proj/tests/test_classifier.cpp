#include <doctest.h>

#include <numeric>

#include "dls/classifier.hpp"
#include "dls/parse.hpp"
#include "pair_gen.hpp"

using namespace dls;

namespace {

UniPoly P(const std::string& s, const NumberField& K = rationals()) { return parse_uni(s, K); }

NumberField sqrt2() { return nf_new({-2, 0, 1}, "r"); }

bool oracle_reducible(const UniPoly& f, const UniPoly& g) { return !is_irreducible_bi(separated(f, g)); }

}  // namespace

TEST_CASE("classify examples") {
  SUBCASE("common left factor") {
    UniPoly f = P("x^6"), g = P("(x^3+1)^2");
    Verdict v = classify(f, g);
    CHECK(v.reducible);
    CHECK(v.kind == CaseKind::CommonLeftFactor);
    CHECK(v.h.degree() == 2);
    CHECK(verify_witness(v, f, g));
  }
  SUBCASE("Dickson pair") {
    NamedPair p = dickson_pair(NFElement(rationals(), 1));
    Verdict v = classify(p.h1, p.h2);
    CHECK(v.kind == CaseKind::DicksonPair);
    CHECK(v.mu.is_identity());
    CHECK(v.alpha == NFElement(rationals(), 1));
    CHECK(verify_witness(v, p.h1, p.h2));
  }
  SUBCASE("T4 and -T4") {
    UniPoly t = chebyshev(4);
    CHECK(classify(t, -t).kind == CaseKind::Irreducible);
    NumberField K = sqrt2();
    Verdict v = classify(t.over(K), (-t).over(K));
    REQUIRE(v.kind == CaseKind::DicksonPair);
    CHECK(verify_witness(v, t, -t));
    NFElement r = NFElement::generator(K);
    CHECK((v.g1 == UniPoly::linear(r, NFElement(K)) || v.g1 == UniPoly::linear(-r, NFElement(K))));

    GeometricVerdict gv = classify_with_extensions(t, -t);
    CHECK(gv.verdict.kind == CaseKind::DicksonPair);
    CHECK(gv.verdict.field == K);
  }
  SUBCASE("irreducible") {
    Verdict v = classify(P("x^3"), P("x^2+1"));
    CHECK_FALSE(v.reducible);
    CHECK(v.kind == CaseKind::Irreducible);
  }
  SUBCASE("degree check") { CHECK_THROWS_AS(classify(P("x"), P("x^2")), Error); }
}

TEST_CASE("exceptional pairs classify over their field") {
  for (PairTag t : {PairTag::Deg7_237, PairTag::Deg7_247}) {
    NamedPair p = exceptional_pair(t);
    const NumberField& K = p.field;
    LinearMap mu{NFElement(K, 3), NFElement(K, -1)}, lam{NFElement(K, 2), NFElement(K, 5)};
    UniPoly f = apply_left(mu, apply_right(p.h1, lam)), g = apply_left(mu, apply_right(p.h2, lam));
    Verdict v = classify(f, g);
    CHECK(v.kind == CaseKind::ExceptionalPair);
    CHECK(verify_witness(v, f, g));
    Verdict w = classify(g, f);
    CHECK(w.kind == CaseKind::ExceptionalPair);
    CHECK(verify_witness(w, g, f));
  }
}

TEST_CASE("exceptional pair composed with an inner polynomial") {
  NamedPair p = exceptional_pair(PairTag::Deg7_247);
  const NumberField& K = p.field;
  UniPoly in = P("x^2+1").over(K);
  UniPoly f = compose(p.h1, in), g = compose(p.h2, UniPoly::x(K) * NFElement(K, 2));
  Verdict v = classify(f, g);
  CHECK(v.kind == CaseKind::ExceptionalPair);
  CHECK(verify_witness(v, f, g));
}

TEST_CASE("extension list") {
  auto L = extension_list();
  CHECK(L.size() >= 6);
  for (size_t i = 1; i < L.size(); ++i) CHECK(L[i - 1].degree() <= L[i].degree());
  for (size_t i = 0; i < L.size(); ++i)
    for (size_t j = i + 1; j < L.size(); ++j) CHECK(L[i] != L[j]);
  CHECK(L.front().degree() == 2);
}

TEST_CASE("random theorem pairs: soundness and completeness") {
  std::mt19937 rng(2024);
  int kinds[4] = {0, 0, 0, 0};
  for (int it = 0; it < 40; ++it) {
    auto pr = testgen::theorem_pair(rng, 12);
    Verdict v = classify(pr.f, pr.g);
    INFO(pr.f.str(), " | ", pr.g.str());
    CHECK(v.reducible);
    CHECK(v.kind != CaseKind::Inconsistent);
    CHECK(verify_witness(v, pr.f, pr.g));
    if (pr.kind == 2) CHECK(v.kind == CaseKind::ExceptionalPair);
    kinds[pr.kind]++;
  }
  CHECK(kinds[1] > 5);
  CHECK(kinds[2] > 5);
  CHECK(kinds[3] > 5);
}

TEST_CASE("random pairs agree with oracle") {
  std::mt19937 rng(77);
  for (int it = 0; it < 30; ++it) {
    UniPoly f = testgen::random_poly(rng, 2 + rng() % 5), g = testgen::random_poly(rng, 2 + rng() % 5);
    Verdict v = classify(f, g);
    CHECK(v.reducible == oracle_reducible(f, g));
    CHECK(v.kind != CaseKind::Inconsistent);
    CHECK(verify_witness(v, f, g));
  }
}

TEST_CASE("minimal reducible refinement") {
  SUBCASE("T4 o x^2 and -T4 o x^3") {
    NumberField K = sqrt2();
    UniPoly t = chebyshev(4, K);
    UniPoly X = UniPoly::x(K);
    auto c = minimal_reducible_refinement(compose(t, pow(X, 2)), compose(-t, pow(X, 3)));
    REQUIRE(c);
    CHECK(c->f == t);
    CHECK(c->g == -t);
    CHECK(c->equal_degrees);
    CHECK(c->branch_loci_equal);
    CHECK(c->subpairs.size() == 3);
    for (auto& s : c->subpairs) CHECK_FALSE(s.reducible);
  }
  SUBCASE("x^2, x^2") {
    auto c = minimal_reducible_refinement(P("x^2"), P("x^2"));
    REQUIRE(c);
    CHECK(c->f == P("x^2"));
    CHECK(c->subpairs.empty());
    bool diag = false;
    for (auto& [F, m] : c->factors.factors) diag = diag || (F.deg_x() == 1 && F.deg_y() == 1 && F.coeff(0, 1) == -F.coeff(1, 0));
    CHECK(diag);
  }
  SUBCASE("irreducible input") { CHECK_FALSE(minimal_reducible_refinement(P("x^3"), P("x^2+1"))); }
}

TEST_CASE("certificates on generated pairs") {
  std::mt19937 rng(5);
  for (int it = 0; it < 20; ++it) {
    auto pr = testgen::theorem_pair(rng, 12);
    auto c = minimal_reducible_refinement(pr.f, pr.g);
    REQUIRE(c);
    CHECK(c->equal_degrees);
    CHECK(c->branch_loci_equal);
    for (auto& s : c->subpairs) CHECK_FALSE(s.reducible);
    int rf = greedy_decomposition(c->f).factors.back().degree();
    int rg = greedy_decomposition(c->g).factors.back().degree();
    CHECK(std::gcd(rf, rg) > 1);
  }
}

TEST_CASE("genus-0 checks") {
  CHECK(genus0_reduced_check(1, {4, 4, 4}).ok);
  CHECK(genus0_reduced_check(1, {6, 3, 3}).ok);
  auto r2 = genus0_reduced_check(2, {2});
  CHECK(r2.ok);
  bool deg4 = false;
  for (auto& s : r2.checks) deg4 = deg4 || s.find("degX=4") != std::string::npos;
  CHECK(deg4);
  CHECK(genus0_reduced_check(2, {1, 1, 3}).ok);
  auto r3 = genus0_reduced_check(3, {237});
  CHECK(r3.ok);
  bool d34 = false;
  for (auto& s : r3.checks) d34 = d34 || s.find("{3,4}") != std::string::npos;
  CHECK(d34);
  CHECK_THROWS_AS(genus0_reduced_check(1, {4, 4, 2}), Error);
  CHECK_THROWS_AS(genus0_reduced_check(4, {}), Error);
}

TEST_CASE("(m,n)-problem") {
  CHECK(mn_problem_check(P("x^3-3x+1"), P("x^2-x"), P("x^2"), P("x^2")));
  auto kind_of = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Parse;
  };
  CHECK(kind_of([] { mn_problem_check(P("x^3-3x"), P("x^3-3x"), P("x^2"), P("x^2")); }) == ErrorKind::PreconditionViolated);
  CHECK(kind_of([] { mn_problem_check(P("x^3"), P("x^2"), P("x^2"), P("x^2")); }) == ErrorKind::PreconditionViolated);
}
