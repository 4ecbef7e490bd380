#include "dls/field.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "dls/qpoly.hpp"
#include "dls/zfactor.hpp"

namespace dls {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::NoGoodSpecialization: return "NoGoodSpecialization";
    case ErrorKind::NotAFactor: return "NotAFactor";
    case ErrorKind::DataUnavailable: return "DataUnavailable";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::NotPGroup: return "NotPGroup";
    case ErrorKind::NoBlocks: return "NoBlocks";
    case ErrorKind::Parse: return "Parse";
  }
  return "Error";
}

namespace {

std::mutex g_mu;
std::map<std::pair<std::vector<std::string>, std::string>, std::unique_ptr<FieldData>> g_fields;

const FieldData* intern(const QVec& minpoly, const std::string& gen) {
  std::vector<std::string> key;
  for (auto& c : minpoly) key.push_back(c.get_str());
  std::lock_guard<std::mutex> lock(g_mu);
  auto& slot = g_fields[{key, gen}];
  if (!slot) {
    slot = std::make_unique<FieldData>();
    slot->minpoly = minpoly;
    slot->degree = static_cast<int>(minpoly.size()) - 1;
    slot->gen = gen;
    if (slot->degree == 1) {
      slot->label = "Q";
    } else {
      std::ostringstream os;
      os << "Q(" << gen << ")";
      slot->label = os.str();
    }
  }
  return slot.get();
}

const FieldData* q_data() {
  static const FieldData* d = intern(QVec{mpq_class(0), mpq_class(1)}, "a");
  return d;
}

}  // namespace

NumberField::NumberField() : d_(q_data()) {}

NumberField rationals() { return NumberField(); }

NumberField nf_new(const QVec& minpoly0, const std::string& gen) {
  QVec m = minpoly0;
  qp::trim(m);
  if (m.size() < 2 || m.back() != 1)
    throw Error(ErrorKind::PreconditionViolated, "minimal polynomial must be monic of degree >= 1");
  if (m.size() == 2) return NumberField(q_data());
  if (!is_irreducible_z(qp::primitive_z(m))) throw Error(ErrorKind::Reducible, "minimal polynomial factors over Q");
  return NumberField(intern(m, gen));
}

void check_same_field(const NumberField& a, const NumberField& b) {
  if (a != b) throw Error(ErrorKind::FieldMismatch, a.label() + " vs " + b.label());
}

NFElement::NFElement(const NumberField& K, QVec c) : K_(K) {
  for (auto& x : c) x.canonicalize();
  qp::trim(c);
  if (static_cast<int>(c.size()) > K.degree()) c = qp::rem(c, K.minpoly());
  c.resize(K.degree());
  c_ = std::move(c);
}

NFElement NFElement::generator(const NumberField& K) {
  if (K.degree() == 1) return NFElement(K, -K.minpoly()[0]);
  QVec c(K.degree());
  c[1] = 1;
  return NFElement(K, c);
}

bool NFElement::is_zero() const {
  for (auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool NFElement::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool NFElement::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

NFElement NFElement::operator-() const {
  NFElement r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

NFElement& NFElement::operator+=(const NFElement& o) {
  check_same_field(K_, o.K_);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

NFElement& NFElement::operator-=(const NFElement& o) {
  check_same_field(K_, o.K_);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

NFElement& NFElement::operator*=(const NFElement& o) {
  check_same_field(K_, o.K_);
  int d = K_.degree();
  if (d == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  QVec prod(2 * d - 1);
  mpq_class t;
  for (int i = 0; i < d; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (sgn(o.c_[j]) == 0) continue;
      t = c_[i] * o.c_[j];
      prod[i + j] += t;
    }
  }
  const QVec& m = K_.minpoly();
  for (int k = 2 * d - 2; k >= d; --k) {
    if (sgn(prod[k]) == 0) continue;
    for (int j = 0; j < d; ++j) {
      t = prod[k] * m[j];
      prod[k - d + j] -= t;
    }
    prod[k] = 0;
  }
  prod.resize(d);
  c_ = std::move(prod);
  return *this;
}

NFElement NFElement::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (K_.degree() == 1) return NFElement(K_, 1 / c_[0]);
  QVec a = c_;
  qp::trim(a);
  auto [g, s] = qp::half_ext_gcd(a, K_.minpoly());
  return NFElement(K_, s);
}

NFElement NFElement::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  NFElement r(K_, 1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

bool NFElement::operator<(const NFElement& o) const {
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return false;
}

std::string rat_str(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
  if (sgn(q.get_den()) == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  q.canonicalize();
  return q;
}

std::string NFElement::str() const { return str(K_.gen()); }

std::string NFElement::str(const std::string& gen) const {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    const mpq_class& c = c_[i];
    if (sgn(c) == 0) continue;
    mpq_class a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << gen;
    if (i > 1) os << "^" << i;
  }
  if (first) return "0";
  return os.str();
}

double NFElement::approx_real(double g) const {
  double r = 0;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) r = r * g + c_[i].get_d();
  return r;
}

NFElement nf_arith(NFOp op, const NFElement& u, const NFElement& v) {
  check_same_field(u.field(), v.field());
  switch (op) {
    case NFOp::Add: return u + v;
    case NFOp::Sub: return u - v;
    case NFOp::Mul: return u * v;
    case NFOp::Inv: return u.inv();
    case NFOp::Div: return u / v;
  }
  return u;
}

NFElement FieldMap::operator()(const NFElement& x) const {
  check_same_field(K_, x.field());
  NFElement r(K_);
  for (int i = K_.degree() - 1; i >= 0; --i) {
    r *= img_;
    r += NFElement(K_, x[i]);
  }
  return r;
}

FieldMap nf_automorphism(const NumberField& K, const NFElement& gen_image) {
  check_same_field(K, gen_image.field());
  NFElement acc(K);
  const QVec& m = K.minpoly();
  for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i) {
    acc *= gen_image;
    acc += NFElement(K, m[i]);
  }
  if (!acc.is_zero()) throw Error(ErrorKind::NotARoot, "image does not satisfy the minimal polynomial");
  return FieldMap(K, gen_image);
}

}  // namespace dls
