#include "dls/families.hpp"

#include <cmath>
#include <numeric>

#include "dls/factor.hpp"

namespace dls {

UniPoly chebyshev(int n, const NumberField& K) { return dickson(n, NFElement(K, 1)); }

UniPoly dickson(int n, const NFElement& alpha) {
  if (n < 0) throw Error(ErrorKind::BadParameters, "negative degree");
  const NumberField& K = alpha.field();
  UniPoly X = UniPoly::x(K);
  UniPoly d0 = UniPoly::constant(NFElement(K, 2)), d1 = X;
  if (n == 0) return d0;
  for (int k = 1; k < n; ++k) {
    UniPoly d2 = X * d1 - d0 * alpha;
    d0 = std::move(d1);
    d1 = std::move(d2);
  }
  return d1;
}

const char* tag_name(PairTag t) {
  switch (t) {
    case PairTag::Deg7_237: return "Deg7_237";
    case PairTag::Deg7_247: return "Deg7_247";
    case PairTag::Deg13_2313: return "Deg13_2313";
    case PairTag::Dickson4: return "Dickson4";
  }
  return "?";
}

PairTag parse_tag(const std::string& s) {
  for (PairTag t : {PairTag::Deg7_237, PairTag::Deg7_247, PairTag::Deg13_2313, PairTag::Dickson4})
    if (s == tag_name(t)) return t;
  throw Error(ErrorKind::BadParameters, "unknown tag '" + s + "'");
}

QVec deg13_minpoly() { return {3, -4, 2, 1, 1}; }

NumberField deg7_field() { return nf_new({2, 1, 1}, "a"); }
NumberField deg13_field() { return nf_new(deg13_minpoly(), "a"); }

FieldMap conjugation(const NumberField& K) {
  NFElement a = NFElement::generator(K);
  for (const NFElement& r : roots_in_field(UniPoly(K, K.minpoly()))) {
    if (r == a) continue;
    FieldMap s(K, r);
    if (s(r) == a) return s;
  }
  throw Error(ErrorKind::PreconditionViolated, "field has no automorphism of order 2");
}

UniPoly deg13_h1(const mpq_class& shift) {
  NumberField K = deg13_field();
  auto el = [&](QVec c) { return NFElement(K, std::move(c)); };
  NFElement c2 = el({51, -29, -12, -16});
  NFElement c1 = el({-618, -25, -96, 16});
  NFElement c0 = el({-53112, 58408, 29148, 21872}) / NFElement(K, 3);
  UniPoly X = UniPoly::x(K);
  UniPoly cubic(K, std::vector<NFElement>{c0, c1, c2, NFElement(K, 1)});
  return pow(X, 3) * (X - UniPoly::constant(NFElement(K, shift))) * pow(cubic, 3);
}

NamedPair pair_from_h1(const UniPoly& h1, PairTag tag) {
  const NumberField& K = h1.field();
  UniPoly crit = squarefree_part(critical_value_poly(h1));
  std::vector<NFElement> nz;
  for (auto& r : roots_in_field(crit))
    if (!r.is_zero()) nz.push_back(r);
  if (nz.size() != 1) throw Error(ErrorKind::PreconditionViolated, "h1 must have exactly one nonzero finite branch point in K");
  FieldMap s = conjugation(K);
  NFElement gamma = nz[0];
  UniPoly h2 = h1.map_coeffs(s) * (gamma / s(gamma));
  return {h1, h2, K, gamma, tag};
}

NamedPair exceptional_pair(PairTag tag) {
  switch (tag) {
    case PairTag::Deg7_237: return pair_from_h1(genus0_P3(), tag);
    case PairTag::Deg7_247: {
      NumberField K = deg7_field();
      UniPoly X = UniPoly::x(K);
      UniPoly h1 = pow(X, 4) * pow(X - UniPoly::constant(NFElement(K, 2)), 2) *
                   (X - UniPoly::constant(NFElement::generator(K)));
      return pair_from_h1(h1, tag);
    }
    case PairTag::Deg13_2313: return pair_from_h1(deg13_h1(27), tag);
    case PairTag::Dickson4: return dickson_pair(NFElement(rationals(), 1));
  }
  throw Error(ErrorKind::BadParameters, "unknown tag");
}

NamedPair exceptional_pair_degree(int d) {
  if (d == 7) return exceptional_pair(PairTag::Deg7_237);
  if (d == 13) return exceptional_pair(PairTag::Deg13_2313);
  if (d == 11 || d == 15 || d == 21 || d == 31)
    throw Error(ErrorKind::DataUnavailable, "degree " + std::to_string(d) + " pairs are not available");
  throw Error(ErrorKind::BadParameters, "no exceptional pair of degree " + std::to_string(d));
}

NamedPair dickson_pair(const NFElement& alpha) {
  const NumberField& K = alpha.field();
  UniPoly h1 = dickson(4, alpha);
  UniPoly h2 = dickson(4, alpha * NFElement(K, 2)) * NFElement(K, mpq_class(-1, 4));
  return {h1, h2, K, alpha * alpha * NFElement(K, 2), PairTag::Dickson4};
}

UniPoly genus0_P1(int a, int b) {
  if (a < 1 || b < 1 || std::gcd(a, b) != 1 || a + b < 4)
    throw Error(ErrorKind::BadParameters, "P1 needs gcd(a,b)=1 and a+b>=4");
  NumberField Q = rationals();
  UniPoly X = UniPoly::x(Q);
  return pow(X, a) * pow(X - UniPoly::constant(NFElement(Q, 1)), b);
}

UniPoly genus0_P2() {
  NumberField Q = rationals();
  UniPoly X = UniPoly::x(Q);
  return pow(X, 3) * UniPoly(Q, QVec{40, 5, 1});
}

UniPoly genus0_P3() {
  NumberField K = deg7_field();
  UniPoly X = UniPoly::x(K);
  NFElement a = NFElement::generator(K);
  return X * pow(X + UniPoly::constant(NFElement(K, 1)), 3) *
         pow(X + UniPoly::constant(a + NFElement(K, 3)), 3);
}

namespace {

double eval_double(const QVec& p, double x) {
  double r = 0;
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i].get_d();
  return r;
}

}  // namespace

NumberField cos_field(int d) {
  if (d < 1) throw Error(ErrorKind::BadParameters, "d must be positive");
  double c = 2 * std::cos(M_PI / d);
  UniPoly T = chebyshev(d) + UniPoly::constant(NFElement(rationals(), 2));
  FactorList fl = factor_q(T);
  const UniPoly* best = nullptr;
  double bv = 0;
  for (auto& [p, m] : fl.factors) {
    double v = std::fabs(eval_double(p.rational_coeffs(), c));
    if (!best || v < bv) {
      best = &p;
      bv = v;
    }
  }
  if (best->degree() == 1) return rationals();
  return nf_new(best->rational_coeffs(), "c");
}

ChebyshevH chebyshev_H(int d) {
  if (d < 3) throw Error(ErrorKind::BadParameters, "chebyshev_H needs d >= 3");
  NumberField K = cos_field(d);
  NFElement c;
  if (K.is_rational()) {
    UniPoly T = chebyshev(d) + UniPoly::constant(NFElement(K, 2));
    double cd = 2 * std::cos(M_PI / d);
    for (auto& r : rational_roots(T))
      if (std::fabs(r.get_d() - cd) < 1e-9) c = NFElement(K, r);
  } else {
    c = NFElement::generator(K);
  }
  auto one = NFElement(K, 1);
  std::vector<UniPoly> cx{UniPoly(K, std::vector<NFElement>{c * c - NFElement(K, 4), NFElement(K), one}),
                          UniPoly(K, std::vector<NFElement>{NFElement(K), -c}),
                          UniPoly::constant(one)};
  return {BiPoly(K, cx), K, c};
}

namespace {

void add_check(FamilyReport& r, const std::string& name, bool ok, const std::string& detail = "") {
  r.checks.push_back(name + ": " + (ok ? "pass" : "fail") + (detail.empty() ? "" : " " + detail));
  if (!ok) r.ok = false;
}

std::string degs_str(const std::vector<int>& d) {
  std::string s = "{";
  for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "}";
}

bool dickson_identity(const NFElement& alpha) {
  const NumberField& K = alpha.field();
  NamedPair p = dickson_pair(alpha);
  BiPoly F = separated(p.h1, p.h2);
  auto q = [&](int sgn) {
    NFElement h(K, mpq_class(1, 2));
    std::vector<UniPoly> cx{UniPoly(K, std::vector<NFElement>{-alpha * NFElement(K, 2), NFElement(K), h}),
                            UniPoly(K, std::vector<NFElement>{NFElement(K), NFElement(K, sgn)}),
                            UniPoly::constant(NFElement(K, 1))};
    return BiPoly(K, cx);
  };
  return q(-1) * q(1) == F;
}

}  // namespace

FamilyReport verify_family(PairTag tag) {
  FamilyReport r{true, {}};
  if (tag == PairTag::Dickson4) {
    bool all = true;
    for (long v : {1L, 2L, -3L, 5L, 7L}) all = all && dickson_identity(NFElement(rationals(), v));
    add_check(r, "identity at rational alpha", all);
    NumberField T = nf_new({-2, 0, 0, 0, 0, 0, 0, 0, 0, 1}, "t");
    add_check(r, "identity at alpha of degree 9", dickson_identity(NFElement::generator(T)));
    NamedPair p = dickson_pair(NFElement(rationals(), 1));
    auto fl = factor_bi(separated(p.h1, p.h2));
    add_check(r, "oracle factor degrees", fl.x_degrees() == std::vector<int>{2, 2}, degs_str(fl.x_degrees()));
    add_check(r, "branch loci", branch_loci_equal(p.h1, p.h2));
    return r;
  }
  NamedPair p = exceptional_pair(tag);
  std::vector<int> want = tag == PairTag::Deg13_2313 ? std::vector<int>{4, 9} : std::vector<int>{3, 4};
  add_check(r, "equal degrees", p.h1.degree() == p.h2.degree());
  add_check(r, "branch loci", branch_loci_equal(p.h1, p.h2));
  auto fl = factor_bi(separated(p.h1, p.h2));
  add_check(r, "oracle factor degrees", fl.x_degrees() == want, degs_str(fl.x_degrees()));
  return r;
}

}  // namespace dls
