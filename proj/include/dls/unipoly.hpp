#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dls/field.hpp"

namespace dls {

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(const NumberField& K) : K_(K) {}
  UniPoly(const NumberField& K, std::vector<NFElement> c);
  UniPoly(const NumberField& K, const QVec& c);
  static UniPoly constant(const NFElement& c);
  static UniPoly x(const NumberField& K);
  static UniPoly monomial(const NFElement& c, int d);
  static UniPoly linear(const NFElement& a, const NFElement& b);  // a*X + b

  const NumberField& field() const { return K_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<NFElement>& coeffs() const { return c_; }
  NFElement coeff(int i) const;
  const NFElement& lc() const { return c_.back(); }
  bool is_rational() const;
  QVec rational_coeffs() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const NFElement& c);

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(c_ == o.c_); }
  bool operator<(const UniPoly& o) const;

  NFElement eval(const NFElement& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly map_coeffs(const FieldMap& s) const;
  // Coefficients embedded into a field containing them (only from Q).
  UniPoly over(const NumberField& L) const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  NumberField K_;
  std::vector<NFElement> c_;
};

inline UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
inline UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
inline UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
inline UniPoly operator*(UniPoly a, const NFElement& c) { return a *= c; }
inline UniPoly operator*(const NFElement& c, UniPoly a) { return a *= c; }

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator/(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly pow(const UniPoly& a, int e);
UniPoly compose(const UniPoly& g, const UniPoly& h);
NFElement resultant(const UniPoly& a, const UniPoly& b);
UniPoly interpolate(const std::vector<NFElement>& xs, const std::vector<NFElement>& ys);
// Taylor shift f(X + c).
UniPoly shift(const UniPoly& f, const NFElement& c);

enum class PolyOp { Add, Sub, Mul, Divmod, Gcd, Derivative, Eval };

}  // namespace dls
