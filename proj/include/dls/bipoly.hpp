#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dls/unipoly.hpp"

namespace dls {

// Recursive dense: coefficient of X^i is a polynomial in Y.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(const NumberField& K) : K_(K) {}
  BiPoly(const NumberField& K, std::vector<UniPoly> cx);
  static BiPoly from_x(const UniPoly& f);
  static BiPoly from_y(const UniPoly& g);
  static BiPoly constant(const NFElement& c);

  const NumberField& field() const { return K_; }
  int deg_x() const { return static_cast<int>(c_.size()) - 1; }
  int deg_y() const;
  bool is_zero() const { return c_.empty(); }
  const std::vector<UniPoly>& coeffs() const { return c_; }
  UniPoly coeff(int i) const;
  const UniPoly& lc_x() const { return c_.back(); }
  NFElement coeff(int i, int j) const { return coeff(i).coeff(j); }
  // Leading coefficient in X-major, then Y, order.
  NFElement leading() const { return c_.back().lc(); }

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const BiPoly& o);
  BiPoly& operator*=(const NFElement& c);
  BiPoly& operator*=(const UniPoly& cy);  // multiply by a polynomial in Y
  bool operator==(const BiPoly& o) const { return c_ == o.c_; }
  bool operator!=(const BiPoly& o) const { return !(c_ == o.c_); }
  bool operator<(const BiPoly& o) const;

  UniPoly eval_y(const NFElement& y0) const;  // polynomial in X
  UniPoly eval_x(const NFElement& x0) const;  // polynomial in Y
  BiPoly swap_xy() const;
  BiPoly derivative_x() const;
  BiPoly shift_y(const NFElement& c) const;  // F(X, Y + c)
  UniPoly content_y() const;                 // monic gcd of X-coefficients
  BiPoly normalized() const;                 // leading() == 1
  BiPoly map_coeffs(const FieldMap& s) const;
  BiPoly over(const NumberField& L) const;

  std::string str(const std::string& x = "X", const std::string& y = "Y") const;

 private:
  void trim();
  NumberField K_;
  std::vector<UniPoly> c_;
};

inline BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
inline BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
inline BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
inline BiPoly operator*(BiPoly a, const NFElement& c) { return a *= c; }
BiPoly pow(const BiPoly& a, int e);

struct BiFactorList {
  NFElement unit;
  std::vector<std::pair<BiPoly, int>> factors;
  BiPoly expand() const;
  std::vector<int> x_degrees() const;  // sorted, with multiplicity
};

BiPoly separated(const UniPoly& f, const UniPoly& g);
// H(f(X), g(Y)).
BiPoly substitute(const BiPoly& H, const UniPoly& f, const UniPoly& g);

UniPoly disc_x(const BiPoly& F);

std::optional<BiPoly> divexact_bi(const BiPoly& F, const BiPoly& H);
bool divides_bi(const BiPoly& H, const BiPoly& F);
BiPoly gcd_bi(const BiPoly& A, const BiPoly& B);

struct FactorBiOptions {
  int skip_specializations = 0;  // ignore this many valid y0 before using one
};

BiFactorList factor_bi(const BiPoly& F, const FactorBiOptions& opt = {});
bool is_irreducible_bi(const BiPoly& F);

}  // namespace dls
