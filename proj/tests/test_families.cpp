#include <doctest.h>

#include <cmath>

#include "dls/decompose.hpp"
#include "dls/factor.hpp"
#include "dls/families.hpp"
#include "dls/parse.hpp"
#include "dls/qpoly.hpp"

using namespace dls;

namespace {

UniPoly P(const std::string& s, const NumberField& K = rationals()) { return parse_uni(s, K); }

// X^n * p(X + beta/X) as a polynomial.
UniPoly laurent_clear(const UniPoly& p, const NFElement& beta) {
  const NumberField& K = p.field();
  int n = p.degree();
  UniPoly X = UniPoly::x(K);
  UniPoly q = X * X + UniPoly::constant(beta);
  UniPoly r(K);
  for (int k = 0; k <= n; ++k) r += pow(q, k) * pow(X, n - k) * p.coeff(k);
  return r;
}

// Arithmetic in Q[z]/(Phi_13).
QVec cyc_reduce(QVec v) {
  QVec phi(13, 1);
  return qp::rem(v, phi);
}

QVec zeta_pow(int e) {
  QVec v(13, 0);
  v[e % 13] = 1;
  return cyc_reduce(v);
}

}  // namespace

TEST_CASE("chebyshev and dickson") {
  CHECK(chebyshev(2) == P("x^2-2"));
  CHECK(chebyshev(4) == P("x^4-4x^2+2"));
  CHECK(chebyshev(1) == P("x"));
  CHECK(chebyshev(0) == P("2"));
  NumberField T = nf_new({-2, 0, 0, 0, 0, 0, 0, 0, 0, 1}, "t");
  NFElement t = NFElement::generator(T);
  CHECK(dickson(4, t) == P("x^4-4t x^2+2t^2", T));
  for (int n = 1; n <= 7; ++n) CHECK(dickson(n, NFElement(rationals(), 0)) == pow(P("x"), n));
  CHECK(dickson(3, NFElement(rationals(), 1)) == P("x^3-3x"));
}

TEST_CASE("defining identities") {
  NumberField Q = rationals();
  UniPoly X = UniPoly::x(Q);
  for (int n = 1; n <= 12; ++n) {
    CHECK(laurent_clear(chebyshev(n), NFElement(Q, 1)) == pow(X, 2 * n) + P("1"));
    for (int a : {2, -3, 5}) {
      NFElement al(Q, a);
      CHECK(laurent_clear(dickson(n, al), al) == pow(X, 2 * n) + UniPoly::constant(al.pow(n)));
    }
  }
}

TEST_CASE("composition laws") {
  NFElement al(rationals(), 3);
  for (int m = 1; m <= 24; ++m)
    for (int n = 1; m * n <= 24; ++n) {
      CHECK(chebyshev(m * n) == compose(chebyshev(m), chebyshev(n)));
      CHECK(dickson(m * n, al) == compose(dickson(m, al.pow(n)), dickson(n, al)));
    }
}

TEST_CASE("degree-13 generator from cyclotomic arithmetic") {
  std::vector<QVec> periods;
  for (int k : {1, 2, 4, 8}) {
    QVec p = qp::add(qp::add(zeta_pow(k), zeta_pow(3 * k)), zeta_pow(9 * k));
    periods.push_back(p);
  }
  // prod (x - p_k) with coefficients in Q[z]/Phi
  std::vector<QVec> poly{QVec{1}};
  for (auto& p : periods) {
    std::vector<QVec> next(poly.size() + 1, QVec{});
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = qp::add(next[i + 1], poly[i]);
      next[i] = qp::sub(next[i], cyc_reduce(qp::mul(poly[i], p)));
    }
    poly = next;
  }
  QVec m;
  for (auto& c : poly) {
    QVec r = c;
    qp::trim(r);
    CHECK(qp::deg(r) <= 0);
    m.push_back(r.empty() ? mpq_class(0) : r[0]);
  }
  CHECK(m == deg13_minpoly());
  // the period satisfies it in the cyclotomic ring
  QVec acc{}, pw{1};
  for (auto& c : m) {
    acc = qp::add(acc, qp::mul(QVec{c}, pw));
    pw = cyc_reduce(qp::mul(pw, periods[0]));
  }
  acc = cyc_reduce(acc);
  qp::trim(acc);
  CHECK(acc.empty());
}

TEST_CASE("conjugation") {
  for (NumberField K : {deg7_field(), deg13_field()}) {
    FieldMap s = conjugation(K);
    NFElement a = NFElement::generator(K);
    CHECK(s(a) != a);
    CHECK(s(s(a)) == a);
  }
  FieldMap s7 = conjugation(deg7_field());
  CHECK(s7(NFElement::generator(deg7_field())) == parse_element("-1-a", deg7_field()));
}

TEST_CASE("exceptional pairs") {
  NumberField K = deg7_field();
  auto p = exceptional_pair(PairTag::Deg7_237);
  CHECK(p.h1 == P("x(x+1)^3(x+a+3)^3", K));
  p = exceptional_pair(PairTag::Deg7_247);
  CHECK(p.h1 == P("x^4(x-2)^2(x-a)", K));
  for (PairTag t : {PairTag::Deg7_237, PairTag::Deg7_247, PairTag::Deg13_2313}) {
    auto q = exceptional_pair(t);
    CHECK(q.h1.degree() == q.h2.degree());
    CHECK(branch_loci_equal(q.h1, q.h2));
    CHECK_FALSE(linearly_related(q.h1, q.h2, false));
    CHECK(critical_value_poly(q.h1).eval(q.gamma).is_zero());
  }
  for (int d : {11, 15, 21, 31}) {
    try {
      exceptional_pair_degree(d);
      FAIL("expected DataUnavailable");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DataUnavailable);
    }
  }
}

TEST_CASE("degree-13 constant") {
  // The X-9 variant does not have three branch points.
  UniPoly c9 = squarefree_part(critical_value_poly(deg13_h1(9)));
  UniPoly c27 = squarefree_part(critical_value_poly(deg13_h1(27)));
  CHECK(c27.degree() == 2);
  CHECK(c9.degree() > 2);
}

TEST_CASE("dickson_pair") {
  auto p = dickson_pair(NFElement(rationals(), 1));
  CHECK(p.h1 == P("x^4-4x^2+2"));
  CHECK(p.h2 == P("-1/4x^4+2x^2-2"));
  p = dickson_pair(NFElement(rationals(), 0));
  CHECK(p.h1 == P("x^4"));
  CHECK(p.h2 == P("-1/4x^4"));
  CHECK(branch_loci_equal(dickson_pair(NFElement(rationals(), 3)).h1, dickson_pair(NFElement(rationals(), 3)).h2));
}

TEST_CASE("genus-0 families") {
  CHECK(genus0_P2() == P("x^5+5x^4+40x^3"));
  CHECK(genus0_P1(1, 3) == P("x(x-1)^3"));
  CHECK_THROWS_AS(genus0_P1(2, 2), Error);
  CHECK_THROWS_AS(genus0_P1(1, 2), Error);
  CHECK(genus0_P3() == exceptional_pair(PairTag::Deg7_237).h1);
}

TEST_CASE("chebyshev_H") {
  auto h3 = chebyshev_H(3);
  CHECK(h3.field.is_rational());
  CHECK(h3.H == parse_bi("X^2-X Y+Y^2-3", rationals()));
  auto h4 = chebyshev_H(4);
  CHECK(h4.field.degree() == 2);
  CHECK(h4.c * h4.c == NFElement(h4.field, 2));
  CHECK(h4.c.approx_real(std::sqrt(2.0)) > 0);
  CHECK(h4.H == parse_bi("X^2-c X Y+Y^2-2", h4.field));
  auto h6 = chebyshev_H(6);
  CHECK(h6.c * h6.c == NFElement(h6.field, 3));
  for (auto [n, m, d] : {std::tuple{3, 3, 3}, {6, 3, 3}, {4, 4, 4}, {8, 4, 4}}) {
    auto ch = chebyshev_H(d);
    const NumberField& K = ch.field;
    BiPoly sub = substitute(ch.H, chebyshev(n / d, K), chebyshev(m / d, K));
    BiPoly F = BiPoly::from_x(chebyshev(n, K)) + BiPoly::from_y(chebyshev(m, K));
    CHECK(divides_bi(sub, F));
  }
}

TEST_CASE("verify_family") {
  for (PairTag t : {PairTag::Dickson4, PairTag::Deg7_237, PairTag::Deg7_247, PairTag::Deg13_2313}) {
    auto r = verify_family(t);
    CHECK(r.ok);
    for (auto& c : r.checks) CHECK(c.find(": pass") != std::string::npos);
  }
}
