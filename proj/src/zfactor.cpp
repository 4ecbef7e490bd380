#include "dls/zfactor.hpp"

#include <algorithm>
#include <random>

#include "dls/error.hpp"

namespace dls {
namespace {

using MP = std::vector<uint64_t>;

struct Fp {
  uint64_t p;
  uint64_t add(uint64_t a, uint64_t b) const { uint64_t s = a + b; return s >= p ? s - p : s; }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
  uint64_t mul(uint64_t a, uint64_t b) const { return (a * b) % p; }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const { return pow(a, p - 2); }

  void trim(MP& a) const {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  MP from_z(const ZVec& f) const {
    MP r(f.size());
    mpz_class t;
    for (size_t i = 0; i < f.size(); ++i) r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), p);
    trim(r);
    return r;
  }
  MP mulp(const MP& a, const MP& b) const {
    if (a.empty() || b.empty()) return {};
    MP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }
  MP subp(const MP& a, const MP& b) const {
    MP r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }
  void divmod(const MP& a, const MP& b, MP* q, MP& r) const {
    r = a;
    trim(r);
    int db = static_cast<int>(b.size()) - 1;
    int da = static_cast<int>(r.size()) - 1;
    if (q) q->assign(da >= db ? da - db + 1 : 0, 0);
    if (da < db) return;
    uint64_t il = inv(b.back());
    for (int k = da; k >= db; --k) {
      uint64_t c = mul(r[k], il);
      if (!c) continue;
      if (q) (*q)[k - db] = c;
      for (int j = 0; j <= db; ++j) r[k - db + j] = sub(r[k - db + j], mul(c, b[j]));
    }
    r.resize(db);
    trim(r);
    if (q) trim(*q);
  }
  MP rem(const MP& a, const MP& b) const {
    MP r;
    divmod(a, b, nullptr, r);
    return r;
  }
  MP quo(const MP& a, const MP& b) const {
    MP q, r;
    divmod(a, b, &q, r);
    return q;
  }
  MP monic(const MP& a) const {
    if (a.empty()) return a;
    MP r = a;
    uint64_t il = inv(a.back());
    for (auto& x : r) x = mul(x, il);
    return r;
  }
  MP gcd(MP a, MP b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      MP r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s*a + t*b = 1 for coprime a, b.
  void ext_gcd(const MP& a, const MP& b, MP& s, MP& t) const {
    MP r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
      MP q, r;
      divmod(r0, r1, &q, r);
      MP s2 = subp(s0, mulp(q, s1));
      MP t2 = subp(t0, mulp(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    uint64_t il = inv(r0.back());
    for (auto& x : s0) x = mul(x, il);
    for (auto& x : t0) x = mul(x, il);
    s = s0;
    t = t0;
  }
  MP derivative(const MP& a) const {
    if (a.size() <= 1) return {};
    MP r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p);
    trim(r);
    return r;
  }
  MP powmod(MP base, const mpz_class& e, const MP& m) const {
    MP r = {1};
    base = rem(base, m);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
      r = rem(mulp(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mulp(r, base), m);
    }
    return r;
  }
};

bool is_prime_small(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<MP, int>> ddf(const Fp& F, MP f) {
  std::vector<std::pair<MP, int>> out;
  MP x = {0, 1};
  MP h = x;
  mpz_class pz = static_cast<unsigned long>(F.p);
  int i = 1;
  while (2 * i <= static_cast<int>(f.size()) - 1) {
    h = F.powmod(h, pz, f);
    MP g = F.gcd(F.subp(h, x), f);
    if (g.size() > 1) {
      out.push_back({g, i});
      f = F.quo(f, g);
      h = F.rem(h, f);
    }
    ++i;
  }
  if (f.size() > 1) out.push_back({f, static_cast<int>(f.size()) - 1});
  return out;
}

void edf(const Fp& F, const MP& g, int d, std::mt19937_64& rng, std::vector<MP>& out) {
  int n = static_cast<int>(g.size()) - 1;
  if (n == d) {
    out.push_back(g);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<uint64_t> dist(0, F.p - 1);
  while (true) {
    MP a(n);
    for (auto& c : a) c = dist(rng);
    F.trim(a);
    if (a.size() <= 1) continue;
    MP b = F.powmod(a, e, g);
    b = F.subp(b, MP{1});
    MP h = F.gcd(b, g);
    int dh = static_cast<int>(h.size()) - 1;
    if (dh > 0 && dh < n) {
      edf(F, h, d, rng, out);
      edf(F, F.quo(g, h), d, rng, out);
      return;
    }
  }
}

// ---- arithmetic mod M = p^k on integer vectors ----

struct ZM {
  mpz_class M;
  void red(ZVec& a) const {
    for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
    zp::trim(a);
  }
  ZVec mul(const ZVec& a, const ZVec& b) const {
    ZVec r = zp::mul(a, b);
    red(r);
    return r;
  }
  ZVec add(const ZVec& a, const ZVec& b) const {
    ZVec r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    red(r);
    return r;
  }
  ZVec sub(const ZVec& a, const ZVec& b) const {
    ZVec r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    red(r);
    return r;
  }
  // Division by a monic polynomial.
  void divmod(const ZVec& a, const ZVec& b, ZVec& q, ZVec& r) const {
    r = a;
    red(r);
    int db = zp::deg(b);
    int da = zp::deg(r);
    q.assign(da >= db ? da - db + 1 : 0, 0);
    for (int k = da; k >= db; --k) {
      mpz_class c = r[k];
      if (sgn(c) == 0) continue;
      q[k - db] = c;
      for (int j = 0; j <= db; ++j) mpz_submul(r[k - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
      mpz_fdiv_r(r[k].get_mpz_t(), r[k].get_mpz_t(), M.get_mpz_t());
      for (int j = 0; j < db; ++j) mpz_fdiv_r(r[k - db + j].get_mpz_t(), r[k - db + j].get_mpz_t(), M.get_mpz_t());
    }
    if (db >= 0 && static_cast<int>(r.size()) > db) r.resize(db);
    zp::trim(r);
    zp::trim(q);
  }
};

ZVec lift_mp(const MP& a) {
  ZVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

// One quadratic Hensel step from modulus m to m^2.
void hensel_step(const ZM& R, const ZVec& f, ZVec& g, ZVec& h, ZVec& s, ZVec& t) {
  ZVec e = R.sub(f, R.mul(g, h));
  ZVec q, r;
  R.divmod(R.mul(s, e), h, q, r);
  ZVec g2 = R.add(g, R.add(R.mul(t, e), R.mul(q, g)));
  ZVec h2 = R.add(h, r);
  ZVec b = R.sub(R.add(R.mul(s, g2), R.mul(t, h2)), ZVec{1});
  ZVec c, d;
  R.divmod(R.mul(s, b), h2, c, d);
  s = R.sub(s, d);
  t = R.sub(t, R.add(R.mul(t, b), R.mul(c, g2)));
  g = std::move(g2);
  h = std::move(h2);
}

ZVec mp_product(const Fp& F, const std::vector<MP>& u, size_t lo, size_t hi, uint64_t lead) {
  MP r = {lead % F.p};
  for (size_t i = lo; i < hi; ++i) r = F.mulp(r, u[i]);
  return lift_mp(r);
}

// Tree lifting: f == lc * prod u mod p, lifted to moduli p^(2^j), j = 1..steps.
void tree_lift(const Fp& F, const std::vector<mpz_class>& mods, const ZVec& f, const std::vector<MP>& u,
               size_t lo, size_t hi, std::vector<ZVec>& out) {
  const mpz_class& M = mods.back();
  if (hi - lo == 1) {
    ZVec r = f;
    mpz_class il;
    mpz_invert(il.get_mpz_t(), r.back().get_mpz_t(), M.get_mpz_t());
    ZM R{M};
    for (auto& c : r) c *= il;
    R.red(r);
    out[lo] = r;
    return;
  }
  size_t mid = (lo + hi) / 2;
  uint64_t lead = mpz_fdiv_ui(f.back().get_mpz_t(), F.p);
  MP g0 = F.from_z(mp_product(F, u, lo, mid, lead));
  MP h0 = F.from_z(mp_product(F, u, mid, hi, 1));
  MP s0, t0;
  F.ext_gcd(g0, h0, s0, t0);
  ZVec g = lift_mp(g0), h = lift_mp(h0), s = lift_mp(s0), t = lift_mp(t0);
  for (size_t j = 1; j < mods.size(); ++j) {
    ZM R{mods[j]};
    hensel_step(R, f, g, h, s, t);
  }
  // g carries the leading coefficient of f mod M.
  tree_lift(F, mods, g, u, lo, mid, out);
  tree_lift(F, mods, h, u, mid, hi, out);
}

void symmetric(ZVec& a, const mpz_class& M) {
  mpz_class half = M / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), M.get_mpz_t());
    if (c > half) c -= M;
  }
  zp::trim(a);
}

std::vector<bool> subset_sums(const std::vector<int>& degs, int n) {
  std::vector<bool> s(n + 1, false);
  s[0] = true;
  for (int d : degs)
    for (int k = n; k >= d; --k)
      if (s[k - d]) s[k] = true;
  return s;
}

ZVec make_primitive(ZVec a) {
  zp::trim(a);
  mpz_class g = zp::content(a);
  if (sgn(a.back()) < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

}  // namespace

bool squarefree_mod_p(const ZVec& f, uint64_t p) {
  Fp F{p};
  MP a = F.from_z(f);
  if (a.size() != f.size()) return false;
  MP g = F.gcd(a, F.derivative(a));
  return g.size() == 1;
}

std::vector<int> degree_pattern_mod_p(const ZVec& f, uint64_t p) {
  Fp F{p};
  MP a = F.monic(F.from_z(f));
  std::vector<int> degs;
  for (auto& [g, d] : ddf(F, a))
    for (int k = 0; k < (static_cast<int>(g.size()) - 1) / d; ++k) degs.push_back(d);
  return degs;
}

std::vector<ZVec> zassenhaus(const ZVec& f0) {
  ZVec f = f0;
  zp::trim(f);
  int n = zp::deg(f);
  if (n <= 1) return {f};
  if (sgn(f[0]) == 0) {
    // f squarefree, so x divides f exactly once
    ZVec q(f.begin() + 1, f.end());
    std::vector<ZVec> r = zassenhaus(q);
    r.push_back(ZVec{0, 1});
    return r;
  }

  // Pick good primes; intersect the possible factor-degree sets.
  std::vector<bool> possible(n + 1, true);
  uint64_t best_p = 0;
  size_t best_count = SIZE_MAX;
  int good = 0;
  for (uint64_t p = 3; good < 7 && p < 100000; p += 2) {
    if (!is_prime_small(p)) continue;
    if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) continue;
    if (!squarefree_mod_p(f, p)) continue;
    ++good;
    std::vector<int> degs = degree_pattern_mod_p(f, p);
    if (degs.size() == 1) return {f};
    std::vector<bool> ss = subset_sums(degs, n);
    for (int k = 0; k <= n; ++k) possible[k] = possible[k] && ss[k];
    if (degs.size() < best_count) {
      best_count = degs.size();
      best_p = p;
    }
  }
  bool any = false;
  for (int k = 1; k < n; ++k) any = any || possible[k];
  if (!any) return {f};
  if (best_p == 0) throw Error(ErrorKind::PreconditionViolated, "no good prime found");

  Fp F{best_p};
  MP fm = F.monic(F.from_z(f));
  std::vector<MP> u;
  std::mt19937_64 rng(0x5eed + n);
  for (auto& [g, d] : ddf(F, fm)) edf(F, g, d, rng, u);
  std::sort(u.begin(), u.end(), [](const MP& a, const MP& b) { return a.size() < b.size(); });

  // Lift above 2 * |lc| * 2^n * ||f||_2.
  mpz_class B = zp::norm2_ceil(f) * abs(f.back());
  mpz_mul_2exp(B.get_mpz_t(), B.get_mpz_t(), n + 2);
  std::vector<mpz_class> mods = {mpz_class(static_cast<unsigned long>(best_p))};
  while (mods.back() <= B) mods.push_back(mods.back() * mods.back());
  const mpz_class M = mods.back();
  std::vector<ZVec> lifted(u.size());
  tree_lift(F, mods, f, u, 0, u.size(), lifted);

  std::vector<ZVec> result;
  std::vector<int> R(u.size());
  for (size_t i = 0; i < u.size(); ++i) R[i] = static_cast<int>(i);
  ZVec cur = f;
  size_t s = 1;
  while (2 * s <= R.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      int dsum = 0;
      for (size_t i : idx) dsum += zp::deg(lifted[R[i]]);
      if (possible[dsum]) {
        mpz_class lc = cur.back();
        mpz_class tc = lc;
        for (size_t i : idx) {
          tc *= lifted[R[i]][0];
          mpz_fdiv_r(tc.get_mpz_t(), tc.get_mpz_t(), M.get_mpz_t());
        }
        if (tc > M / 2) tc -= M;
        mpz_class target = lc * cur[0];
        bool ok = sgn(tc) != 0 && mpz_divisible_p(target.get_mpz_t(), tc.get_mpz_t());
        if (ok) {
          ZVec cand = {lc};
          ZM Rm{M};
          for (size_t i : idx) cand = Rm.mul(cand, lifted[R[i]]);
          symmetric(cand, M);
          cand = make_primitive(cand);
          ZVec q;
          if (zp::deg(cand) == dsum && zp::divexact(cur, cand, q)) {
            result.push_back(cand);
            cur = make_primitive(q);
            std::vector<int> R2;
            for (size_t i = 0, k = 0; i < R.size(); ++i) {
              if (k < s && idx[k] == i) {
                ++k;
                continue;
              }
              R2.push_back(R[i]);
            }
            R = std::move(R2);
            found = true;
            break;
          }
        }
      }
      // next combination
      int i = static_cast<int>(s) - 1;
      while (i >= 0 && idx[i] == R.size() - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (zp::deg(cur) >= 1) result.push_back(cur);
  return result;
}

std::vector<std::pair<QVec, int>> yun_q(const QVec& f0) {
  QVec f = qp::monic(f0);
  std::vector<std::pair<QVec, int>> out;
  if (qp::deg(f) <= 0) return out;
  QVec fp = qp::derivative(f);
  QVec a = qp::gcd(f, fp);
  QVec b = qp::divmod(f, a).first;
  QVec c = qp::divmod(fp, a).first;
  QVec d = qp::sub(c, qp::derivative(b));
  int i = 1;
  while (qp::deg(b) > 0) {
    QVec g = qp::gcd(b, d);
    b = qp::divmod(b, g).first;
    c = qp::divmod(d, g).first;
    if (qp::deg(g) > 0) out.push_back({g, i});
    d = qp::sub(c, qp::derivative(b));
    ++i;
  }
  return out;
}

ZFactorization factor_z(const ZVec& f0) {
  ZVec f = f0;
  zp::trim(f);
  if (f.empty()) throw Error(ErrorKind::PreconditionViolated, "factor of zero polynomial");
  ZFactorization out;
  mpz_class c = zp::content(f);
  if (sgn(f.back()) < 0) c = -c;
  out.content = c;
  for (auto& x : f) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  if (zp::deg(f) == 0) return out;

  // Fast squarefree certificate modulo a prime.
  bool sqf = false;
  int tries = 0;
  for (uint64_t p = 101; tries < 4 && !sqf; p += 2) {
    if (!is_prime_small(p)) continue;
    if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) continue;
    ++tries;
    sqf = squarefree_mod_p(f, p);
  }
  std::vector<std::pair<ZVec, int>> parts;
  if (sqf) {
    parts.push_back({f, 1});
  } else {
    for (auto& [a, m] : yun_q(qp::from_z(f))) parts.push_back({qp::primitive_z(a), m});
  }
  for (auto& [a, m] : parts)
    for (auto& g : zassenhaus(a)) out.factors.push_back({g, m});
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    if (x.second != y.second) return x.second < y.second;
    return x.first < y.first;
  });
  return out;
}

bool is_irreducible_z(const ZVec& f) {
  ZFactorization z = factor_z(f);
  return z.factors.size() == 1 && z.factors[0].second == 1;
}

}  // namespace dls
