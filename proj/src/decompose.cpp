#include "dls/decompose.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "dls/factor.hpp"
#include "dls/families.hpp"

namespace dls {

LinearMap operator*(const LinearMap& l, const LinearMap& o) { return {l.a * o.a, l.a * o.b + l.b}; }

UniPoly apply_left(const LinearMap& mu, const UniPoly& f) {
  return f * mu.a + UniPoly::constant(mu.b);
}

UniPoly apply_right(const UniPoly& f, const LinearMap& nu) { return compose(f, nu.poly()); }

UniPoly Decomposition::expand() const {
  UniPoly r = factors.back();
  for (int i = static_cast<int>(factors.size()) - 2; i >= 0; --i) {
    if (i < static_cast<int>(normalization.size())) r = apply_left(normalization[i], r);
    r = compose(factors[i], r);
  }
  return r;
}

std::vector<int> Decomposition::degrees() const {
  std::vector<int> d;
  for (auto& f : factors) d.push_back(f.degree());
  return d;
}

bool Decomposition::operator<(const Decomposition& o) const {
  if (degrees() != o.degrees()) return degrees() < o.degrees();
  for (size_t i = 0; i < factors.size(); ++i)
    if (factors[i] != o.factors[i]) return factors[i] < o.factors[i];
  return false;
}

UniPoly canonical_right(const UniPoly& h) {
  UniPoly r = h - UniPoly::constant(h.coeff(0));
  return r.monic();
}

std::optional<std::pair<UniPoly, UniPoly>> right_factor(const UniPoly& f, int d) {
  int n = f.degree();
  if (d <= 1 || d >= n || n % d) throw Error(ErrorKind::PreconditionViolated, "right_factor needs 1 < d < deg f, d | deg f");
  const NumberField& K = f.field();
  int r = n / d;
  UniPoly F = f.monic();
  // b = (1 + a_1 u + a_2 u^2 + ...)^(1/r) with a_k = F_{n-k}.
  std::vector<NFElement> a(d, NFElement(K)), b(d, NFElement(K));
  for (int k = 1; k < d; ++k) a[k] = F.coeff(n - k);
  b[0] = NFElement(K, 1);
  NFElement e(K, mpq_class(1, r));
  for (int k = 1; k < d; ++k) {
    NFElement s(K);
    for (int j = 1; j <= k; ++j) s += (e * NFElement(K, j) - NFElement(K, k - j)) * a[j] * b[k - j];
    b[k] = s / NFElement(K, k);
  }
  std::vector<NFElement> hc(d + 1, NFElement(K));
  for (int k = 0; k < d; ++k) hc[d - k] = b[k];
  UniPoly h(K, hc);
  std::vector<NFElement> g;
  UniPoly q = f;
  while (!q.is_zero()) {
    auto [qq, rr] = divmod(q, h);
    if (rr.degree() > 0) return std::nullopt;
    g.push_back(rr.coeff(0));
    q = qq;
  }
  return std::make_pair(UniPoly(K, g), h);
}

namespace {

std::vector<int> proper_divisors(int n) {
  std::vector<int> d;
  for (int k = 2; k < n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

}  // namespace

bool is_indecomposable(const UniPoly& f) {
  for (int d : proper_divisors(f.degree()))
    if (right_factor(f, d)) return false;
  return true;
}

Decomposition greedy_decomposition(const UniPoly& f) {
  if (f.degree() < 2) throw Error(ErrorKind::PreconditionViolated, "decomposition needs degree >= 2");
  std::vector<UniPoly> rev;
  UniPoly cur = f;
  while (true) {
    bool split = false;
    for (int d : proper_divisors(cur.degree())) {
      auto rf = right_factor(cur, d);
      if (!rf) continue;
      rev.push_back(rf->second);
      cur = rf->first;
      split = true;
      break;
    }
    if (!split) break;
  }
  rev.push_back(cur);
  Decomposition D;
  D.factors.assign(rev.rbegin(), rev.rend());
  for (size_t i = 0; i + 1 < D.factors.size(); ++i) D.normalization.push_back(LinearMap::identity(f.field()));
  return D;
}

std::vector<Decomposition> complete_decompositions(const UniPoly& f) {
  Decomposition start = greedy_decomposition(f);
  std::set<Decomposition> seen{start};
  std::deque<Decomposition> queue{start};
  while (!queue.empty()) {
    Decomposition D = queue.front();
    queue.pop_front();
    for (size_t i = 0; i + 1 < D.factors.size(); ++i) {
      int dg = D.factors[i].degree(), dh = D.factors[i + 1].degree();
      if (std::gcd(dg, dh) != 1) continue;
      auto mv = ritt_move(D.factors[i], D.factors[i + 1]);
      if (!mv) continue;
      Decomposition E = D;
      E.factors[i] = mv->first;
      E.factors[i + 1] = mv->second;
      if (seen.insert(E).second) queue.push_back(E);
    }
  }
  return {seen.begin(), seen.end()};
}

std::optional<std::pair<UniPoly, UniPoly>> ritt_move(const UniPoly& g, const UniPoly& h) {
  if (std::gcd(g.degree(), h.degree()) != 1)
    throw Error(ErrorKind::PreconditionViolated, "ritt_move needs coprime degrees");
  if (g.degree() < 2 || h.degree() < 2) return std::nullopt;
  return right_factor(compose(g, h), g.degree());
}

namespace {

UniPoly tail(const Decomposition& D, size_t from) {
  UniPoly r = D.factors.back();
  for (size_t i = D.factors.size() - 1; i-- > from;) r = compose(D.factors[i], r);
  return r;
}

UniPoly checked_canonical_factor(const UniPoly& f, const UniPoly& v) {
  UniPoly cv = canonical_right(v);
  if (v.degree() == f.degree() || v.degree() == 1) return cv;
  if (v.degree() < 1 || f.degree() % v.degree() != 0)
    throw Error(ErrorKind::NotAFactor, "degree of v does not fit");
  auto rf = right_factor(f, v.degree());
  if (!rf || rf->second != cv) throw Error(ErrorKind::NotAFactor, "v is not a right composition factor of f");
  return cv;
}

}  // namespace

bool is_right_unique(const UniPoly& f, const UniPoly& v) {
  UniPoly cv = checked_canonical_factor(f, v);
  if (v.degree() == f.degree() || v.degree() == 1) return true;
  for (const Decomposition& D : complete_decompositions(f)) {
    bool hit = false;
    for (size_t i = 1; i < D.factors.size() && !hit; ++i) {
      UniPoly t = tail(D, i);
      if (t.degree() == cv.degree()) hit = canonical_right(t) == cv;
    }
    if (!hit) return false;
  }
  return true;
}

bool is_strongly_unique(const UniPoly& f, const UniPoly& v) {
  if (!is_right_unique(f, v)) return false;
  int n = f.degree();
  for (int p = 2; p * p <= n; ++p) {
    bool prime = true;
    for (int q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (!prime || n % (p * p)) continue;
    UniPoly w = f;
    if (p * p < n) {
      auto rf = right_factor(f, p * p);
      if (!rf) continue;
      w = rf->second;
    }
    if (recognize_power(w) || recognize_dickson(w)) return false;
  }
  return true;
}

std::optional<PowerWitness> recognize_power(const UniPoly& f) {
  int n = f.degree();
  if (n < 2) throw Error(ErrorKind::PreconditionViolated, "recognize_power needs degree >= 2");
  const NumberField& K = f.field();
  NFElement c = f.lc();
  NFElement v = -f.coeff(n - 1) / (c * NFElement(K, n));
  NFElement e = f.eval(v);
  UniPoly X = UniPoly::x(K);
  UniPoly cand = pow(X - UniPoly::constant(v), n) * c + UniPoly::constant(e);
  if (cand != f) return std::nullopt;
  return PowerWitness{{c, e}, n, {NFElement(K, 1), -v}};
}

std::optional<DicksonWitness> recognize_dickson(const UniPoly& f) {
  int n = f.degree();
  if (n < 2) throw Error(ErrorKind::PreconditionViolated, "recognize_dickson needs degree >= 2");
  const NumberField& K = f.field();
  NFElement c = f.lc();
  NFElement v = -f.coeff(n - 1) / (c * NFElement(K, n));
  UniPoly F = shift(f, v);
  NFElement alpha = -F.coeff(n - 2) / (c * NFElement(K, n));
  if (alpha.is_zero()) return std::nullopt;
  UniPoly D = dickson(n, alpha);
  NFElement e = F.coeff(0) - c * D.coeff(0);
  if (D * c + UniPoly::constant(e) != F) return std::nullopt;
  return DicksonWitness{{c, e}, n, alpha, {NFElement(K, 1), -v}};
}

std::vector<std::pair<UniPoly, UniPoly>> left_factors(const UniPoly& f) {
  int n = f.degree();
  if (n < 2) throw Error(ErrorKind::PreconditionViolated, "left_factors needs degree >= 2");
  std::vector<std::pair<UniPoly, UniPoly>> out{{f, UniPoly::x(f.field())}};
  for (int d : proper_divisors(n)) {
    auto rf = right_factor(f, d);
    if (rf) out.push_back(*rf);
  }
  return out;
}

namespace {

struct NormalForm {
  UniPoly N;        // monic, centered, N(0) = 0
  LinearMap outer;  // p = outer∘N∘inner
  LinearMap inner;
};

NormalForm normal_form(const UniPoly& p) {
  const NumberField& K = p.field();
  int n = p.degree();
  NFElement c = p.lc();
  NFElement v = -p.coeff(n - 1) / (c * NFElement(K, n));
  UniPoly P = shift(p, v);
  NFElement e = P.coeff(0);
  UniPoly N = (P - UniPoly::constant(e)) * c.inv();
  return {N, {c, e}, {NFElement(K, 1), -v}};
}

}  // namespace

std::vector<LinearWitness> linearly_related_all(const UniPoly& f, const UniPoly& g, bool right_only) {
  check_same_field(f.field(), g.field());
  int n = f.degree();
  if (n != g.degree() || n < 2) throw Error(ErrorKind::PreconditionViolated, "linearly_related needs equal degrees >= 2");
  const NumberField& K = f.field();
  NormalForm nf = normal_form(f), ng = normal_form(g);
  // Need s with N_g(sX) = s^n N_f(X).
  int k0 = -1;
  for (int k = n - 1; k >= 0; --k) {
    bool zf = nf.N.coeff(k).is_zero(), zg = ng.N.coeff(k).is_zero();
    if (zf != zg) return {};
    if (!zf && k0 < 0) k0 = k;
  }
  std::vector<NFElement> scales;
  if (k0 < 0) {
    if (!right_only) {
      scales.push_back(NFElement(K, 1));
    } else {
      std::vector<NFElement> c(n + 1, NFElement(K));
      c[0] = -(nf.outer.a / ng.outer.a);
      c[n] = NFElement(K, 1);
      scales = roots_in_field(UniPoly(K, c));
    }
  } else {
    NFElement r = ng.N.coeff(k0) / nf.N.coeff(k0);
    std::vector<NFElement> c(n - k0 + 1, NFElement(K));
    c[0] = -r;
    c[n - k0] = NFElement(K, 1);
    scales = roots_in_field(UniPoly(K, c));
  }
  std::vector<LinearWitness> out;
  for (const NFElement& s : scales) {
    LinearMap S{s, NFElement(K)};
    if (apply_right(ng.N, S) != nf.N * s.pow(n)) continue;
    LinearMap sigma_inv{s.pow(n).inv(), NFElement(K)};
    LinearMap mu = nf.outer * sigma_inv * ng.outer.inverse();
    LinearMap nu = ng.inner.inverse() * S * nf.inner;
    if (right_only && !mu.is_identity()) continue;
    out.push_back({mu, nu});
  }
  return out;
}

std::optional<LinearWitness> linearly_related(const UniPoly& f, const UniPoly& g, bool right_only) {
  auto all = linearly_related_all(f, g, right_only);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace dls
