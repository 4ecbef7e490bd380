#include "dls/bipoly.hpp"

#include <algorithm>
#include <sstream>

#include "dls/factor.hpp"

namespace dls {

BiPoly::BiPoly(const NumberField& K, std::vector<UniPoly> cx) : K_(K), c_(std::move(cx)) {
  for (auto& p : c_) check_same_field(K_, p.field());
  trim();
}

BiPoly BiPoly::from_x(const UniPoly& f) {
  std::vector<UniPoly> c;
  for (auto& a : f.coeffs()) c.push_back(UniPoly::constant(a));
  return BiPoly(f.field(), c);
}

BiPoly BiPoly::from_y(const UniPoly& g) { return BiPoly(g.field(), {g}); }

BiPoly BiPoly::constant(const NFElement& c) { return BiPoly(c.field(), {UniPoly::constant(c)}); }

void BiPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BiPoly::deg_y() const {
  int d = -1;
  for (auto& p : c_) d = std::max(d, p.degree());
  return d;
}

UniPoly BiPoly::coeff(int i) const {
  if (i < 0 || i > deg_x()) return UniPoly(K_);
  return c_[i];
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& p : r.c_) p = -p;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  check_same_field(K_, o.K_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), UniPoly(K_));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  check_same_field(K_, o.K_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), UniPoly(K_));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  check_same_field(K_, o.K_);
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<UniPoly> r(c_.size() + o.c_.size() - 1, UniPoly(K_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (!o.c_[j].is_zero()) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const NFElement& c) {
  for (auto& p : c_) p *= c;
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const UniPoly& cy) {
  for (auto& p : c_) p *= cy;
  trim();
  return *this;
}

bool BiPoly::operator<(const BiPoly& o) const {
  if (deg_x() != o.deg_x()) return deg_x() < o.deg_x();
  if (deg_y() != o.deg_y()) return deg_y() < o.deg_y();
  for (int i = deg_x(); i >= 0; --i)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

UniPoly BiPoly::eval_y(const NFElement& y0) const {
  std::vector<NFElement> r;
  for (auto& p : c_) r.push_back(p.eval(y0));
  return UniPoly(K_, r);
}

UniPoly BiPoly::eval_x(const NFElement& x0) const {
  UniPoly r(K_);
  for (int i = deg_x(); i >= 0; --i) {
    r *= x0;
    r += c_[i];
  }
  return r;
}

BiPoly BiPoly::swap_xy() const {
  int dy = deg_y();
  std::vector<std::vector<NFElement>> t(dy + 1, std::vector<NFElement>(c_.size(), NFElement(K_)));
  for (size_t i = 0; i < c_.size(); ++i)
    for (int j = 0; j <= c_[i].degree(); ++j) t[j][i] = c_[i].coeffs()[j];
  std::vector<UniPoly> r;
  for (auto& row : t) r.emplace_back(K_, row);
  return BiPoly(K_, r);
}

BiPoly BiPoly::derivative_x() const {
  std::vector<UniPoly> r;
  for (int i = 1; i <= deg_x(); ++i) r.push_back(c_[i] * NFElement(K_, i));
  return BiPoly(K_, r);
}

BiPoly BiPoly::shift_y(const NFElement& c) const {
  std::vector<UniPoly> r;
  for (auto& p : c_) r.push_back(shift(p, c));
  return BiPoly(K_, r);
}

UniPoly BiPoly::content_y() const {
  UniPoly g(K_);
  for (auto& p : c_) {
    g = gcd(g, p);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly BiPoly::normalized() const {
  if (is_zero()) return *this;
  return *this * leading().inv();
}

BiPoly BiPoly::map_coeffs(const FieldMap& s) const {
  std::vector<UniPoly> r;
  for (auto& p : c_) r.push_back(p.map_coeffs(s));
  return BiPoly(K_, r);
}

BiPoly BiPoly::over(const NumberField& L) const {
  std::vector<UniPoly> r;
  for (auto& p : c_) r.push_back(p.over(L));
  return BiPoly(L, r);
}

std::string BiPoly::str(const std::string& x, const std::string& y) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = deg_x(); i >= 0; --i) {
    const UniPoly& p = c_[i];
    for (int j = p.degree(); j >= 0; --j) {
      const NFElement& c = p.coeffs()[j];
      if (c.is_zero()) continue;
      std::string mono;
      auto add = [&](const std::string& v, int e) {
        if (e == 0) return;
        if (!mono.empty()) mono += "*";
        mono += v;
        if (e > 1) mono += "^" + std::to_string(e);
      };
      add(x, i);
      add(y, j);
      if (c.is_rational()) {
        mpq_class a = abs(c.rational());
        bool neg = sgn(c.rational()) < 0;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        if (mono.empty()) os << a.get_str();
        else if (a == 1) os << mono;
        else os << a.get_str() << "*" << mono;
      } else {
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        if (!mono.empty()) os << "*" << mono;
      }
      first = false;
    }
  }
  return os.str();
}

BiPoly pow(const BiPoly& a, int e) {
  BiPoly r = BiPoly::constant(NFElement(a.field(), 1)), b = a;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

BiPoly BiFactorList::expand() const {
  BiPoly r = BiPoly::constant(unit);
  for (auto& [p, m] : factors) r *= pow(p, m);
  return r;
}

std::vector<int> BiFactorList::x_degrees() const {
  std::vector<int> d;
  for (auto& [p, m] : factors)
    for (int i = 0; i < m; ++i) d.push_back(p.deg_x());
  std::sort(d.begin(), d.end());
  return d;
}

BiPoly separated(const UniPoly& f, const UniPoly& g) {
  check_same_field(f.field(), g.field());
  return BiPoly::from_x(f) - BiPoly::from_y(g);
}

BiPoly substitute(const BiPoly& H, const UniPoly& f, const UniPoly& g) {
  const NumberField& K = H.field();
  BiPoly r(K);
  BiPoly fx = BiPoly::from_x(f);
  for (int i = H.deg_x(); i >= 0; --i) {
    r *= fx;
    r += BiPoly::from_y(compose(H.coeff(i), g));
  }
  return r;
}

UniPoly disc_x(const BiPoly& F) {
  const NumberField& K = F.field();
  int n = F.deg_x();
  if (n < 1) throw Error(ErrorKind::PreconditionViolated, "disc_x needs degX >= 1");
  if (n == 1) return UniPoly::constant(NFElement(K, 1));
  BiPoly Fx = F.derivative_x();
  const UniPoly& l = F.lc_x();
  int bound = (2 * n - 1) * std::max(F.deg_y(), 0);
  std::vector<NFElement> xs, ys;
  for (long t = 0; static_cast<int>(xs.size()) <= bound; t = (t > 0 ? -t : -t + 1)) {
    NFElement y(K, t);
    if (l.eval(y).is_zero()) continue;
    xs.push_back(y);
    ys.push_back(resultant(F.eval_y(y), Fx.eval_y(y)));
  }
  UniPoly res = interpolate(xs, ys);
  UniPoly d = res / l;
  if ((static_cast<long>(n) * (n - 1) / 2) % 2) d = -d;
  return d;
}

std::optional<BiPoly> divexact_bi(const BiPoly& F, const BiPoly& H) {
  check_same_field(F.field(), H.field());
  if (H.is_zero()) throw Error(ErrorKind::DivisionByZero, "bivariate division by zero");
  const NumberField& K = F.field();
  if (F.is_zero()) return BiPoly(K);
  int dh = H.deg_x();
  if (F.deg_x() < dh || F.deg_y() < H.deg_y()) return std::nullopt;
  std::vector<UniPoly> r = F.coeffs();
  std::vector<UniPoly> q(F.deg_x() - dh + 1, UniPoly(K));
  const UniPoly& lh = H.lc_x();
  for (int k = F.deg_x(); k >= dh; --k) {
    if (r[k].is_zero()) continue;
    auto [qq, rr] = divmod(r[k], lh);
    if (!rr.is_zero()) return std::nullopt;
    for (int j = 0; j <= dh; ++j) r[k - dh + j] -= qq * H.coeffs()[j];
    q[k - dh] = qq;
  }
  for (int k = 0; k < dh; ++k)
    if (!r[k].is_zero()) return std::nullopt;
  return BiPoly(K, q);
}

bool divides_bi(const BiPoly& H, const BiPoly& F) { return divexact_bi(F, H).has_value(); }

namespace {

BiPoly prim_part(const BiPoly& A) {
  if (A.is_zero()) return A;
  UniPoly c = A.content_y();
  std::vector<UniPoly> r;
  for (auto& p : A.coeffs()) r.push_back(p / c);
  return BiPoly(A.field(), r).normalized();
}

BiPoly pseudo_rem(BiPoly A, const BiPoly& B) {
  const NumberField& K = A.field();
  int db = B.deg_x();
  BiPoly lb = BiPoly::from_y(B.lc_x());
  while (!A.is_zero() && A.deg_x() >= db) {
    std::vector<UniPoly> mono(A.deg_x() - db + 1, UniPoly(K));
    mono.back() = A.lc_x();
    A = A * lb - BiPoly(K, mono) * B;
  }
  return A;
}

}  // namespace

BiPoly gcd_bi(const BiPoly& A0, const BiPoly& B0) {
  check_same_field(A0.field(), B0.field());
  const NumberField& K = A0.field();
  if (A0.is_zero()) return B0.normalized();
  if (B0.is_zero()) return A0.normalized();
  UniPoly cg = gcd(A0.content_y(), B0.content_y());
  BiPoly A = prim_part(A0), B = prim_part(B0);
  if (A.deg_x() < B.deg_x()) std::swap(A, B);
  while (!B.is_zero() && B.deg_x() > 0) {
    BiPoly R = pseudo_rem(A, B);
    A = B;
    B = prim_part(R);
  }
  BiPoly g = B.is_zero() ? A : BiPoly::constant(NFElement(K, 1));
  g *= cg;
  return g.normalized();
}

namespace {

// Truncated power series in t with polynomial-in-X coefficients.
using Series = std::vector<UniPoly>;

Series series_mul(const Series& a, const Series& b, int prec, const NumberField& K) {
  Series r(prec, UniPoly(K));
  for (int i = 0; i < static_cast<int>(a.size()) && i < prec; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < static_cast<int>(b.size()) && i + j < prec; ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

UniPoly inverse_mod(const UniPoly& a, const UniPoly& m) {
  const NumberField& K = m.field();
  UniPoly r0 = m, r1 = a % m;
  UniPoly s0(K), s1 = UniPoly::constant(NFElement(K, 1));
  while (r1.degree() > 0) {
    auto [q, r] = divmod(r0, r1);
    UniPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.is_zero()) throw Error(ErrorKind::PreconditionViolated, "factors not coprime");
  return (s1 * r1.lc().inv()) % m;
}

// X-coefficients of G(X, t) as a series in t; G given in K[t][X].
Series to_series(const BiPoly& G, int prec) {
  const NumberField& K = G.field();
  Series s(prec, UniPoly(K));
  for (int i = 0; i <= G.deg_x(); ++i) {
    const UniPoly& c = G.coeffs()[i];
    for (int j = 0; j <= c.degree() && j < prec; ++j)
      s[j] += UniPoly::monomial(c.coeffs()[j], i);
  }
  return s;
}

BiPoly from_series(const Series& s, const NumberField& K) {
  int dx = -1;
  for (auto& p : s) dx = std::max(dx, p.degree());
  std::vector<std::vector<NFElement>> c(dx + 1, std::vector<NFElement>(s.size(), NFElement(K)));
  for (size_t j = 0; j < s.size(); ++j)
    for (int i = 0; i <= s[j].degree(); ++i) c[i][j] = s[j].coeffs()[i];
  std::vector<UniPoly> r;
  for (auto& row : c) r.emplace_back(K, row);
  return BiPoly(K, r);
}

struct Specialization {
  NFElement y0;
  FactorList fl;
};

std::optional<Specialization> find_specialization(const BiPoly& F, int skip, int limit) {
  const NumberField& K = F.field();
  const UniPoly& l = F.lc_x();
  int seen = 0, tried = 0;
  for (long t = 0; tried < 2 * limit + 1; t = (t > 0 ? -t : -t + 1), ++tried) {
    NFElement y(K, t);
    if (l.eval(y).is_zero()) continue;
    UniPoly f0 = F.eval_y(y);
    if (!is_squarefree(f0)) continue;
    if (seen++ < skip) continue;
    return Specialization{y, factor(f0)};
  }
  return std::nullopt;
}

// F primitive over K[Y], squarefree, degX >= 1. Returns normalized irreducible factors.
std::vector<BiPoly> factor_squarefree(const BiPoly& F, const Specialization& sp) {
  const NumberField& K = F.field();
  std::vector<UniPoly> u;
  for (auto& [p, m] : sp.fl.factors) u.push_back(p);
  if (u.size() <= 1) return {F.normalized()};

  BiPoly G = F.shift_y(sp.y0);
  int prec = G.deg_y() + G.lc_x().degree() + 1;

  // 1/l(t) as a series, then target = G / l.
  const UniPoly& l = G.lc_x();
  std::vector<NFElement> linv(prec, NFElement(K));
  NFElement l0inv = l.coeff(0).inv();
  linv[0] = l0inv;
  for (int k = 1; k < prec; ++k) {
    NFElement s(K);
    for (int j = 1; j <= k; ++j) s += l.coeff(j) * linv[k - j];
    linv[k] = -s * l0inv;
  }
  Series target = to_series(G, prec);
  {
    Series li(prec, UniPoly(K));
    for (int k = 0; k < prec; ++k) li[k] = UniPoly::constant(linv[k]);
    target = series_mul(target, li, prec, K);
  }

  size_t r = u.size();
  UniPoly P = UniPoly::constant(NFElement(K, 1));
  for (auto& ui : u) P *= ui;
  std::vector<UniPoly> s(r);
  for (size_t i = 0; i < r; ++i) s[i] = inverse_mod(P / u[i], u[i]);

  std::vector<Series> U(r, Series(prec, UniPoly(K)));
  for (size_t i = 0; i < r; ++i) U[i][0] = u[i];
  for (int k = 1; k < prec; ++k) {
    Series prod(k + 1, UniPoly(K));
    prod[0] = UniPoly::constant(NFElement(K, 1));
    for (size_t i = 0; i < r; ++i) prod = series_mul(prod, U[i], k + 1, K);
    UniPoly e = target[k] - prod[k];
    if (e.is_zero()) continue;
    for (size_t i = 0; i < r; ++i) U[i][k] = (s[i] * e) % u[i];
  }

  // Recombination.
  std::vector<BiPoly> out;
  BiPoly cur = G;
  std::vector<size_t> idx(r);
  for (size_t i = 0; i < r; ++i) idx[i] = i;
  Series lser(prec, UniPoly(K));
  auto lead_series = [&](const BiPoly& C) {
    Series ls(prec, UniPoly(K));
    for (int j = 0; j <= C.lc_x().degree() && j < prec; ++j) ls[j] = UniPoly::constant(C.lc_x().coeff(j));
    return ls;
  };
  for (size_t sz = 1; 2 * sz <= idx.size();) {
    bool found = false;
    std::vector<size_t> sel(sz);
    for (size_t i = 0; i < sz; ++i) sel[i] = i;
    while (true) {
      Series cand = lead_series(cur);
      int dx = 0;
      for (size_t i : sel) {
        cand = series_mul(cand, U[idx[i]], prec, K);
        dx += u[idx[i]].degree();
      }
      BiPoly C = from_series(cand, K);
      bool ok = C.deg_x() == dx;
      if (ok) {
        C = prim_part(C);
        ok = C.deg_y() <= cur.deg_y();
      }
      if (ok && !cur.coeff(0).is_zero()) {
        UniPoly c0 = C.coeff(0);
        ok = !c0.is_zero() && (cur.coeff(0) % c0).is_zero();
      }
      std::optional<BiPoly> q;
      if (ok) q = divexact_bi(cur, C);
      if (q) {
        out.push_back(C);
        cur = *q;
        std::vector<size_t> rest;
        for (size_t i = 0; i < idx.size(); ++i)
          if (std::find(sel.begin(), sel.end(), i) == sel.end()) rest.push_back(idx[i]);
        idx = rest;
        found = true;
        break;
      }
      // next combination
      int i = static_cast<int>(sz) - 1;
      while (i >= 0 && sel[i] == idx.size() - sz + i) --i;
      if (i < 0) break;
      ++sel[i];
      for (size_t j = i + 1; j < sz; ++j) sel[j] = sel[j - 1] + 1;
    }
    if (!found) ++sz;
  }
  if (cur.deg_x() > 0) out.push_back(prim_part(cur));

  NFElement back = -sp.y0;
  for (auto& c : out) c = c.shift_y(back).normalized();
  return out;
}

void sort_bi(std::vector<std::pair<BiPoly, int>>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.first.deg_x() != b.first.deg_x()) return a.first.deg_x() < b.first.deg_x();
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
}

// Yun over K[Y][X] for a primitive F.
std::vector<std::pair<BiPoly, int>> squarefree_bi(const BiPoly& F) {
  std::vector<std::pair<BiPoly, int>> out;
  BiPoly Fp = F.derivative_x();
  BiPoly a = gcd_bi(F, Fp);
  BiPoly b = *divexact_bi(F, a);
  BiPoly c = *divexact_bi(Fp, a);
  BiPoly d = c - b.derivative_x();
  for (int i = 1; b.deg_x() > 0; ++i) {
    BiPoly g = gcd_bi(b, d);
    b = *divexact_bi(b, g);
    c = *divexact_bi(d, g);
    if (g.deg_x() > 0) out.push_back({g, i});
    d = c - b.derivative_x();
  }
  return out;
}

std::vector<BiPoly> factor_primitive_squarefree(const BiPoly& F, const FactorBiOptions& opt) {
  int bound = 10 * (F.deg_x() + std::max(F.deg_y(), 0));
  auto sp = find_specialization(F, opt.skip_specializations, bound);
  if (!sp) throw Error(ErrorKind::NoGoodSpecialization, "no valid specialization within bound");
  return factor_squarefree(F, *sp);
}

}  // namespace

BiFactorList factor_bi(const BiPoly& F, const FactorBiOptions& opt) {
  if (F.is_zero()) throw Error(ErrorKind::PreconditionViolated, "factor of zero polynomial");
  const NumberField& K = F.field();
  BiFactorList out{F.leading(), {}};
  UniPoly cont = F.content_y();
  if (cont.degree() > 0)
    for (auto& [p, m] : factor(cont).factors) out.factors.push_back({BiPoly::from_y(p), m});
  if (F.deg_x() >= 1) {
    BiPoly P = prim_part(F);
    int bound = 10 * (P.deg_x() + std::max(P.deg_y(), 0));
    int quick = std::min(bound, 8);
    std::vector<std::pair<BiPoly, int>> parts;
    if (find_specialization(P, 0, quick)) parts.push_back({P, 1});
    else parts = squarefree_bi(P);
    for (auto& [a, m] : parts)
      for (auto& q : factor_primitive_squarefree(a, opt)) out.factors.push_back({q, m});
  }
  NFElement lc_prod(K, 1);
  for (auto& [p, m] : out.factors) lc_prod *= p.leading().pow(m);
  out.unit = F.leading() / lc_prod;
  sort_bi(out.factors);
  return out;
}

bool is_irreducible_bi(const BiPoly& F) {
  BiFactorList fl = factor_bi(F);
  return fl.factors.size() == 1 && fl.factors[0].second == 1;
}

}  // namespace dls
