#include "dls/unipoly.hpp"

#include <sstream>

namespace dls {

UniPoly::UniPoly(const NumberField& K, std::vector<NFElement> c) : K_(K), c_(std::move(c)) {
  for (auto& x : c_) check_same_field(K_, x.field());
  trim();
}

UniPoly::UniPoly(const NumberField& K, const QVec& c) : K_(K) {
  for (auto& x : c) c_.emplace_back(K, x);
  trim();
}

UniPoly UniPoly::constant(const NFElement& c) { return UniPoly(c.field(), std::vector<NFElement>{c}); }

UniPoly UniPoly::x(const NumberField& K) {
  return UniPoly(K, std::vector<NFElement>{NFElement(K), NFElement(K, 1)});
}

UniPoly UniPoly::monomial(const NFElement& c, int d) {
  std::vector<NFElement> v(d + 1, NFElement(c.field()));
  v[d] = c;
  return UniPoly(c.field(), v);
}

UniPoly UniPoly::linear(const NFElement& a, const NFElement& b) {
  return UniPoly(a.field(), std::vector<NFElement>{b, a});
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

NFElement UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return NFElement(K_);
  return c_[i];
}

bool UniPoly::is_rational() const {
  for (auto& c : c_)
    if (!c.is_rational()) return false;
  return true;
}

QVec UniPoly::rational_coeffs() const {
  QVec r;
  for (auto& c : c_) r.push_back(c.rational());
  return r;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  check_same_field(K_, o.K_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), NFElement(K_));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  check_same_field(K_, o.K_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), NFElement(K_));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  check_same_field(K_, o.K_);
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<NFElement> r(c_.size() + o.c_.size() - 1, NFElement(K_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = std::move(r);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const NFElement& c) {
  check_same_field(K_, c.field());
  for (auto& x : c_) x *= c;
  trim();
  return *this;
}

bool UniPoly::operator<(const UniPoly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (int i = degree(); i >= 0; --i)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

NFElement UniPoly::eval(const NFElement& x) const {
  NFElement r(K_);
  for (int i = degree(); i >= 0; --i) {
    r *= x;
    r += c_[i];
  }
  return r;
}

UniPoly UniPoly::derivative() const {
  if (degree() <= 0) return UniPoly(K_);
  std::vector<NFElement> r;
  for (int i = 1; i <= degree(); ++i) r.push_back(c_[i] * NFElement(K_, i));
  return UniPoly(K_, r);
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * lc().inv();
}

UniPoly UniPoly::map_coeffs(const FieldMap& s) const {
  std::vector<NFElement> r;
  for (auto& c : c_) r.push_back(s(c));
  return UniPoly(K_, r);
}

UniPoly UniPoly::over(const NumberField& L) const {
  if (L == K_) return *this;
  if (!is_rational()) throw Error(ErrorKind::FieldMismatch, "cannot embed non-rational coefficients");
  return UniPoly(L, rational_coeffs());
}

std::string UniPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const NFElement& c = c_[i];
    if (c.is_zero()) continue;
    std::string mono;
    if (i == 1) mono = var;
    else if (i > 1) mono = var + "^" + std::to_string(i);
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
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  check_same_field(a.field(), b.field());
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const NumberField& K = a.field();
  int db = b.degree();
  if (a.degree() < db) return {UniPoly(K), a};
  std::vector<NFElement> r = a.coeffs();
  std::vector<NFElement> q(a.degree() - db + 1, NFElement(K));
  NFElement il = b.lc().inv();
  const auto& bc = b.coeffs();
  for (int k = a.degree(); k >= db; --k) {
    if (r[k].is_zero()) continue;
    NFElement c = r[k] * il;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= c * bc[j];
    q[k - db] = c;
  }
  r.resize(db, NFElement(K));
  return {UniPoly(K, q), UniPoly(K, r)};
}

UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  check_same_field(a.field(), b.field());
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UniPoly pow(const UniPoly& a, int e) {
  UniPoly r = UniPoly::constant(NFElement(a.field(), 1)), b = a;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

UniPoly compose(const UniPoly& g, const UniPoly& h) {
  check_same_field(g.field(), h.field());
  UniPoly r(g.field());
  for (int i = g.degree(); i >= 0; --i) {
    r *= h;
    r += UniPoly::constant(g.coeffs()[i]);
  }
  return r;
}

NFElement resultant(const UniPoly& a0, const UniPoly& b0) {
  check_same_field(a0.field(), b0.field());
  const NumberField& K = a0.field();
  UniPoly a = a0, b = b0;
  NFElement acc(K, 1);
  while (true) {
    if (a.is_zero() || b.is_zero()) return NFElement(K);
    int da = a.degree(), db = b.degree();
    if (db == 0) return acc * b.lc().pow(da);
    UniPoly r = a % b;
    if (r.is_zero()) return NFElement(K);
    int dr = r.degree();
    if ((static_cast<long>(da) * db) % 2) acc = -acc;
    acc *= b.lc().pow(da - dr);
    a = std::move(b);
    b = std::move(r);
  }
}

UniPoly interpolate(const std::vector<NFElement>& xs, const std::vector<NFElement>& ys) {
  const NumberField& K = xs.at(0).field();
  size_t n = xs.size();
  std::vector<NFElement> c = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UniPoly r = UniPoly::constant(c[n - 1]);
  UniPoly X = UniPoly::x(K);
  for (size_t k = n - 1; k-- > 0;) {
    r *= (X - UniPoly::constant(xs[k]));
    r += UniPoly::constant(c[k]);
  }
  return r;
}

UniPoly shift(const UniPoly& f, const NFElement& c) {
  const NumberField& K = f.field();
  std::vector<NFElement> a = f.coeffs();
  int n = f.degree();
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) a[j] += c * a[j + 1];
  return UniPoly(K, a);
}

}  // namespace dls
