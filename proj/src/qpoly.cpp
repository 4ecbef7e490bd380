#include "dls/qpoly.hpp"

#include <cstdlib>

#include "dls/error.hpp"

namespace dls {
namespace qp {

void trim(QVec& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

int deg(const QVec& a) { return static_cast<int>(a.size()) - 1; }

QVec add(const QVec& a, const QVec& b) {
  QVec r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QVec sub(const QVec& a, const QVec& b) {
  QVec r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QVec mul(const QVec& a, const QVec& b) {
  if (a.empty() || b.empty()) return {};
  QVec r(a.size() + b.size() - 1);
  mpq_class t;
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      t = a[i] * b[j];
      r[i + j] += t;
    }
  }
  trim(r);
  return r;
}

std::pair<QVec, QVec> divmod(const QVec& a, const QVec& b) {
  if (b.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  QVec r = a;
  trim(r);
  int db = deg(b);
  if (deg(r) < db) return {{}, r};
  QVec q(deg(r) - db + 1);
  mpq_class inv = 1 / b.back();
  mpq_class c, t;
  for (int k = deg(r); k >= db; --k) {
    if (sgn(r[k]) == 0) continue;
    c = r[k] * inv;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) {
      t = c * b[j];
      r[k - db + j] -= t;
    }
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {q, r};
}

QVec rem(const QVec& a, const QVec& b) { return divmod(a, b).second; }

QVec monic(const QVec& a) {
  if (a.empty()) return a;
  QVec r = a;
  mpq_class inv = 1 / a.back();
  for (auto& x : r) x *= inv;
  return r;
}

QVec gcd(const QVec& a, const QVec& b) {
  QVec x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    QVec r = rem(x, y);
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

std::pair<QVec, QVec> half_ext_gcd(const QVec& a, const QVec& b) {
  QVec r0 = a, r1 = b, s0 = {mpq_class(1)}, s1 = {};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QVec s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.empty()) return {r0, s0};
  mpq_class inv = 1 / r0.back();
  for (auto& x : r0) x *= inv;
  for (auto& x : s0) x *= inv;
  return {r0, s0};
}

QVec derivative(const QVec& a) {
  if (a.size() <= 1) return {};
  QVec r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<long>(i);
  trim(r);
  return r;
}

mpq_class eval(const QVec& a, const mpq_class& x) {
  mpq_class r = 0;
  for (int i = deg(a); i >= 0; --i) r = r * x + a[i];
  return r;
}

mpq_class resultant(const QVec& a0, const QVec& b0) {
  QVec a = a0, b = b0;
  trim(a);
  trim(b);
  mpq_class acc = 1;
  while (true) {
    if (a.empty() || b.empty()) return 0;
    int da = deg(a), db = deg(b);
    if (db == 0) {
      mpq_class p = 1;
      for (int i = 0; i < da; ++i) p *= b[0];
      return acc * p;
    }
    QVec r = rem(a, b);
    if (r.empty()) return 0;
    int dr = deg(r);
    if ((static_cast<long>(da) * db) % 2) acc = -acc;
    for (int i = 0; i < da - dr; ++i) acc *= b.back();
    a = std::move(b);
    b = std::move(r);
  }
}

ZVec primitive_z(const QVec& a0) {
  QVec a = a0;
  trim(a);
  if (a.empty()) return {};
  mpz_class den = 1;
  for (auto& c : a) {
    mpz_class d = c.get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  ZVec z(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    mpq_class t = a[i] * den;
    z[i] = t.get_num();
  }
  mpz_class g = zp::content(z);
  if (sgn(z.back()) < 0) g = -g;
  for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return z;
}

QVec from_z(const ZVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  return r;
}

QVec interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
  size_t n = xs.size();
  std::vector<mpq_class> c = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  QVec r = {c[n - 1]};
  for (size_t k = n - 1; k-- > 0;) {
    // r = r*(x - xs[k]) + c[k]
    QVec t(r.size() + 1);
    for (size_t i = 0; i < r.size(); ++i) {
      t[i + 1] += r[i];
      t[i] -= r[i] * xs[k];
    }
    t[0] += c[k];
    r = std::move(t);
  }
  trim(r);
  return r;
}

}  // namespace qp

namespace zp {

void trim(ZVec& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

int deg(const ZVec& a) { return static_cast<int>(a.size()) - 1; }

mpz_class content(const ZVec& a) {
  mpz_class g = 0;
  for (auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZVec mul(const ZVec& a, const ZVec& b) {
  if (a.empty() || b.empty()) return {};
  ZVec r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

bool divexact(const ZVec& a, const ZVec& b, ZVec& q) {
  ZVec r = a;
  trim(r);
  int db = deg(b);
  if (db < 0) return false;
  if (deg(r) < db) {
    q.clear();
    return r.empty();
  }
  q.assign(deg(r) - db + 1, 0);
  mpz_class c;
  for (int k = deg(r); k >= db; --k) {
    if (sgn(r[k]) == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_divexact(c.get_mpz_t(), r[k].get_mpz_t(), b.back().get_mpz_t());
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) mpz_submul(r[k - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
  }
  for (int i = 0; i < db && i < static_cast<int>(r.size()); ++i)
    if (sgn(r[i]) != 0) return false;
  trim(q);
  return true;
}

ZVec derivative(const ZVec& a) {
  if (a.size() <= 1) return {};
  ZVec r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  return r;
}

mpz_class norm2_ceil(const ZVec& a) {
  mpz_class s = 0;
  for (auto& c : a) s += c * c;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  if (r * r < s) r += 1;
  return r;
}

}  // namespace zp
}  // namespace dls
