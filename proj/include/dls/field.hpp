#pragma once

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

#include "dls/error.hpp"

namespace dls {

using QVec = std::vector<mpq_class>;

struct FieldData {
  QVec minpoly;  // monic, low to high
  int degree;
  std::string gen;
  std::string label;
};

// Handle to an interned field. Q is the degree-1 field with minpoly x.
class NumberField {
 public:
  NumberField();
  explicit NumberField(const FieldData* d) : d_(d) {}

  int degree() const { return d_->degree; }
  bool is_rational() const { return d_->degree == 1; }
  const QVec& minpoly() const { return d_->minpoly; }
  const std::string& gen() const { return d_->gen; }
  const std::string& label() const { return d_->label; }
  const FieldData* data() const { return d_; }

  bool operator==(const NumberField& o) const {
    return d_ == o.d_ || d_->minpoly == o.d_->minpoly;
  }
  bool operator!=(const NumberField& o) const { return !(*this == o); }

 private:
  const FieldData* d_;
};

NumberField rationals();

// Checks irreducibility over Q; throws Reducible.
NumberField nf_new(const QVec& minpoly, const std::string& gen = "a");

class NFElement {
 public:
  NFElement() : K_(), c_(1) {}
  explicit NFElement(const NumberField& K) : K_(K), c_(K.degree()) {}
  NFElement(const NumberField& K, const mpq_class& r) : K_(K), c_(K.degree()) {
    c_[0] = r;
    c_[0].canonicalize();
  }
  NFElement(const NumberField& K, long r) : NFElement(K, mpq_class(r)) {}
  NFElement(const NumberField& K, QVec c);  // reduces modulo minpoly

  static NFElement generator(const NumberField& K);

  const NumberField& field() const { return K_; }
  const QVec& coeffs() const { return c_; }
  const mpq_class& operator[](int i) const { return c_[i]; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  const mpq_class& rational() const { return c_[0]; }

  NFElement operator-() const;
  NFElement& operator+=(const NFElement& o);
  NFElement& operator-=(const NFElement& o);
  NFElement& operator*=(const NFElement& o);
  NFElement& operator/=(const NFElement& o) { return *this *= o.inv(); }
  NFElement inv() const;
  NFElement pow(long e) const;

  bool operator==(const NFElement& o) const { return c_ == o.c_; }
  bool operator!=(const NFElement& o) const { return !(c_ == o.c_); }
  // Lexicographic on coefficient vectors; only meaningful within one field.
  bool operator<(const NFElement& o) const;

  std::string str() const;
  std::string str(const std::string& gen) const;
  double approx_real(double gen_value) const;

 private:
  NumberField K_;
  QVec c_;
};

inline NFElement operator+(NFElement a, const NFElement& b) { return a += b; }
inline NFElement operator-(NFElement a, const NFElement& b) { return a -= b; }
inline NFElement operator*(NFElement a, const NFElement& b) { return a *= b; }
inline NFElement operator/(NFElement a, const NFElement& b) { return a /= b; }

enum class NFOp { Add, Sub, Mul, Inv, Div };
NFElement nf_arith(NFOp op, const NFElement& u, const NFElement& v);

void check_same_field(const NumberField& a, const NumberField& b);

// Field automorphism determined by the image of the generator.
class FieldMap {
 public:
  FieldMap(NumberField K, NFElement gen_image) : K_(std::move(K)), img_(std::move(gen_image)) {}
  NFElement operator()(const NFElement& x) const;
  const NFElement& gen_image() const { return img_; }
  const NumberField& field() const { return K_; }

 private:
  NumberField K_;
  NFElement img_;
};

FieldMap nf_automorphism(const NumberField& K, const NFElement& gen_image);

// Rational text helpers.
std::string rat_str(const mpq_class& q);
mpq_class parse_rational(const std::string& s);

}  // namespace dls
