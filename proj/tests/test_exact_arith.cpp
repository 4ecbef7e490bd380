#include <doctest.h>

#include <random>

#include "dls/field.hpp"

using namespace dls;

namespace {

NFElement random_elem(const NumberField& K, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-9, 9), den(1, 5);
  QVec c;
  for (int i = 0; i < K.degree(); ++i) c.push_back(mpq_class(d(rng), den(rng)));
  for (auto& q : c) q.canonicalize();
  return NFElement(K, c);
}

}  // namespace

TEST_CASE("nf_new") {
  NumberField K = nf_new({2, 1, 1});
  CHECK(K.degree() == 2);
  NumberField Q = nf_new({-1, 1});
  CHECK(Q.is_rational());
  CHECK(Q == rationals());
  try {
    nf_new({-1, 0, 1});
    FAIL("expected Reducible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Reducible);
  }
  CHECK_THROWS_AS(nf_new({1, 0, 2}), Error);
}

TEST_CASE("nf_arith examples") {
  NumberField K = nf_new({2, 1, 1});
  NFElement a = NFElement::generator(K);
  CHECK(nf_arith(NFOp::Mul, a, a) == NFElement(K, QVec{-2, -1}));
  NumberField Q = rationals();
  CHECK(nf_arith(NFOp::Inv, NFElement(Q, 2), NFElement(Q)) == NFElement(Q, mpq_class(1, 2)));
  NumberField R2 = nf_new({-2, 0, 1}, "r");
  NFElement r = NFElement::generator(R2);
  CHECK(nf_arith(NFOp::Mul, r, r) == NFElement(R2, 2));
  CHECK_THROWS_AS(nf_arith(NFOp::Div, a, NFElement(K)), Error);
  try {
    nf_arith(NFOp::Add, a, r);
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldMismatch);
  }
}

TEST_CASE("field element text") {
  NumberField K = nf_new({2, 1, 1});
  NFElement a = NFElement::generator(K);
  CHECK((a * NFElement(K, 3) + NFElement(K, mpq_class(1, 2))).str() == "3*a + 1/2");
  CHECK(parse_rational("-4/9") == mpq_class(-4, 9));
  CHECK(parse_rational("6/4") == mpq_class(3, 2));
  CHECK(rat_str(mpq_class(-4, 9)) == "-4/9");
}

TEST_CASE("automorphisms") {
  NumberField K = nf_new({2, 1, 1});
  NFElement a = NFElement::generator(K);
  FieldMap conj = nf_automorphism(K, NFElement(K, -1) - a);
  CHECK(conj(a) == NFElement(K, -1) - a);
  CHECK(conj(conj(a)) == a);
  FieldMap id = nf_automorphism(K, a);
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    NFElement u = random_elem(K, rng), v = random_elem(K, rng);
    CHECK(id(u) == u);
    CHECK(conj(conj(u)) == u);
    CHECK(conj(u * v) == conj(u) * conj(v));
    CHECK(conj(u + v) == conj(u) + conj(v));
  }
  try {
    nf_automorphism(K, a + NFElement(K, 1));
    FAIL("expected NotARoot");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotARoot);
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(11);
  for (const QVec& m : {QVec{2, 1, 1}, QVec{-2, 0, 1}, QVec{3, -4, 2, 1, 1}, QVec{-2, 0, 0, 1}}) {
    NumberField K = nf_new(m);
    for (int i = 0; i < 40; ++i) {
      NFElement u = random_elem(K, rng), v = random_elem(K, rng), w = random_elem(K, rng);
      CHECK(u + v == v + u);
      CHECK(u * v == v * u);
      CHECK((u + v) + w == u + (v + w));
      CHECK((u * v) * w == u * (v * w));
      CHECK(u * (v + w) == u * v + u * w);
      if (!u.is_zero()) CHECK((u * u.inv()).is_one());
    }
  }
}

TEST_CASE("rational canonical form") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-1000, 1000);
  for (int i = 0; i < 100; ++i) {
    int den = d(rng);
    if (den == 0) den = 1;
    mpq_class q(d(rng), den);
    q.canonicalize();
    mpq_class q2 = q;
    q2.canonicalize();
    CHECK(q == q2);
    CHECK(sgn(q.get_den()) > 0);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    CHECK(g == 1);
    CHECK(parse_rational(rat_str(q)) == q);
  }
}
