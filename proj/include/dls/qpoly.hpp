#pragma once

// Raw dense polynomials over Q and Z (low to high), used below the field layer.

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace dls {

using QVec = std::vector<mpq_class>;
using ZVec = std::vector<mpz_class>;

namespace qp {

void trim(QVec& a);
int deg(const QVec& a);
QVec add(const QVec& a, const QVec& b);
QVec sub(const QVec& a, const QVec& b);
QVec mul(const QVec& a, const QVec& b);
std::pair<QVec, QVec> divmod(const QVec& a, const QVec& b);
QVec rem(const QVec& a, const QVec& b);
QVec monic(const QVec& a);
QVec gcd(const QVec& a, const QVec& b);
// Returns (g, s) with s*a = g mod b, g monic gcd.
std::pair<QVec, QVec> half_ext_gcd(const QVec& a, const QVec& b);
QVec derivative(const QVec& a);
mpq_class eval(const QVec& a, const mpq_class& x);
// Resultant of two nonzero polynomials.
mpq_class resultant(const QVec& a, const QVec& b);
// Scale to a primitive integer polynomial with positive leading coefficient.
ZVec primitive_z(const QVec& a);
QVec from_z(const ZVec& a);
// Newton interpolation through (x_i, y_i), x_i distinct.
QVec interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys);

}  // namespace qp

namespace zp {

void trim(ZVec& a);
int deg(const ZVec& a);
mpz_class content(const ZVec& a);
ZVec mul(const ZVec& a, const ZVec& b);
// Exact division in Z[x]; returns false if not exact.
bool divexact(const ZVec& a, const ZVec& b, ZVec& q);
ZVec derivative(const ZVec& a);
mpz_class norm2_ceil(const ZVec& a);

}  // namespace zp

}  // namespace dls
