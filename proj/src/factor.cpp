#include "dls/factor.hpp"

#include <algorithm>

#include "dls/qpoly.hpp"
#include "dls/zfactor.hpp"

namespace dls {

UniPoly FactorList::expand() const {
  UniPoly r = UniPoly::constant(unit);
  for (auto& [p, m] : factors) r *= pow(p, m);
  return r;
}

int FactorList::count_with_multiplicity() const {
  int n = 0;
  for (auto& f : factors) n += f.second;
  return n;
}

namespace {

void sort_factors(std::vector<std::pair<UniPoly, int>>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
}

}  // namespace

FactorList squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::PreconditionViolated, "squarefree decomposition of zero");
  FactorList out{f.lc(), {}};
  UniPoly fm = f.monic();
  if (fm.degree() <= 0) return out;
  UniPoly fp = fm.derivative();
  UniPoly a = gcd(fm, fp);
  UniPoly b = fm / a;
  UniPoly c = fp / a;
  UniPoly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UniPoly g = gcd(b, d);
    b = b / g;
    c = d / g;
    if (g.degree() > 0) out.factors.push_back({g, i});
    d = c - b.derivative();
    ++i;
  }
  sort_factors(out.factors);
  return out;
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.degree() <= 0) return f.monic();
  return f.monic() / gcd(f, f.derivative());
}

bool is_squarefree(const UniPoly& f) { return gcd(f, f.derivative()).degree() <= 0; }

FactorList factor_q(const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::PreconditionViolated, "factor of zero polynomial");
  if (!f.is_rational()) throw Error(ErrorKind::FieldMismatch, "factor_q needs rational coefficients");
  const NumberField& K = f.field();
  FactorList out{f.lc(), {}};
  if (f.degree() <= 0) return out;
  ZFactorization z = factor_z(qp::primitive_z(f.rational_coeffs()));
  for (auto& [g, m] : z.factors) out.factors.push_back({UniPoly(K, qp::monic(qp::from_z(g))), m});
  sort_factors(out.factors);
  return out;
}

UniPoly norm_poly(const UniPoly& f) {
  const NumberField& K = f.field();
  NumberField Q = rationals();
  if (K.is_rational()) return UniPoly(Q, f.rational_coeffs());
  int D = f.degree() * K.degree();
  std::vector<mpq_class> xs, ys;
  const QVec& m = K.minpoly();
  for (int i = 0; i <= D; ++i) {
    NFElement v = f.eval(NFElement(K, i));
    QVec rep = v.coeffs();
    qp::trim(rep);
    xs.push_back(i);
    ys.push_back(qp::resultant(m, rep));
  }
  return UniPoly(Q, qp::interpolate(xs, ys));
}

namespace {

// Trager on a squarefree polynomial over K; returns monic irreducible factors.
std::vector<UniPoly> trager(const UniPoly& g) {
  const NumberField& K = g.field();
  if (g.degree() <= 1) return {g.monic()};
  NFElement alpha = NFElement::generator(K);
  for (long s = 0;; s = (s > 0 ? -s : -s + 1)) {
    NFElement shiftv = alpha * NFElement(K, -s);
    UniPoly gs = shift(g, shiftv);  // g(x - s*alpha)
    UniPoly N = norm_poly(gs);
    ZVec Nz = qp::primitive_z(N.rational_coeffs());
    ZFactorization z = factor_z(Nz);
    bool sqf = true;
    for (auto& pr : z.factors)
      if (pr.second > 1) sqf = false;
    if (!sqf) continue;
    std::vector<UniPoly> out;
    if (z.factors.size() == 1) return {g.monic()};
    UniPoly rest = gs.monic();
    for (auto& [nz, mult] : z.factors) {
      if (rest.degree() <= 0) break;
      UniPoly Ni(K, qp::from_z(nz));
      UniPoly h = gcd(rest, Ni);
      if (h.degree() <= 0) continue;
      rest = rest / h;
      out.push_back(shift(h, -shiftv).monic());
    }
    return out;
  }
}

}  // namespace

FactorList factor_nf(const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::PreconditionViolated, "factor of zero polynomial");
  if (f.field().is_rational()) return factor_q(f);
  FactorList out{f.lc(), {}};
  if (f.degree() <= 0) return out;
  FactorList sq = squarefree_decomposition(f);
  for (auto& [a, m] : sq.factors)
    for (auto& h : trager(a)) out.factors.push_back({h, m});
  sort_factors(out.factors);
  return out;
}

FactorList factor(const UniPoly& f) { return f.field().is_rational() ? factor_q(f) : factor_nf(f); }

bool is_irreducible(const UniPoly& f) {
  if (f.degree() <= 0) return false;
  FactorList fl = factor(f);
  return fl.factors.size() == 1 && fl.factors[0].second == 1;
}

std::vector<mpq_class> rational_roots(const UniPoly& f) {
  std::vector<mpq_class> out;
  for (auto& [p, m] : factor_q(f).factors)
    if (p.degree() == 1)
      for (int i = 0; i < m; ++i) out.push_back(-p.coeffs()[0].rational());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NFElement> roots_in_field(const UniPoly& f) {
  std::vector<NFElement> out;
  if (f.degree() < 1) return out;
  if (f.degree() == 1) return {-f.coeffs()[0] / f.coeffs()[1]};
  for (auto& [p, m] : factor(f).factors)
    if (p.degree() == 1) out.push_back(-p.coeffs()[0]);
  return out;
}

UniPoly critical_value_poly(const UniPoly& f) {
  if (f.degree() < 2) throw Error(ErrorKind::PreconditionViolated, "critical values need degree >= 2");
  const NumberField& K = f.field();
  int n = f.degree();
  UniPoly fp = f.derivative();
  std::vector<NFElement> xs, ys;
  for (int i = 0; i < n; ++i) {
    NFElement t(K, i);
    xs.push_back(t);
    ys.push_back(resultant(f - UniPoly::constant(t), fp));
  }
  return interpolate(xs, ys).monic();
}

bool simply_branched(const UniPoly& f) {
  if (f.degree() < 2) throw Error(ErrorKind::PreconditionViolated, "simply_branched needs degree >= 2");
  if (!is_squarefree(f.derivative())) return false;
  return squarefree_part(critical_value_poly(f)).degree() == f.degree() - 1;
}

bool branch_loci_equal(const UniPoly& f, const UniPoly& g) {
  check_same_field(f.field(), g.field());
  if (f.degree() < 2 || g.degree() < 2) throw Error(ErrorKind::PreconditionViolated, "degrees must be >= 2");
  return squarefree_part(critical_value_poly(f)) == squarefree_part(critical_value_poly(g));
}

}  // namespace dls
