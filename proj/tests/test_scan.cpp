#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dls/decompose.hpp"
#include "dls/factor.hpp"
#include "dls/parse.hpp"
#include "dls/scan.hpp"
#include "pair_gen.hpp"

using namespace dls;

namespace {

UniPoly P(const std::string& s) { return parse_uni(s, rationals()); }

bool is_power(long a, int p) {
  long r = std::lround(std::pow(std::fabs(static_cast<double>(a)), 1.0 / p));
  for (long c = std::max(0L, r - 1); c <= r + 1; ++c) {
    long v = 1;
    for (int i = 0; i < p; ++i) v *= c;
    if (v == a || (p % 2 == 1 && -v == a)) return true;
  }
  return false;
}

// X^n - a is reducible iff a is a p-th power for a prime p | n, or 4 | n and a = -4 b^4.
bool capelli(long a, int n) {
  if (a == 0) return true;
  for (int p = 2; p <= n; ++p) {
    bool prime = true;
    for (int k = 2; k < p; ++k)
      if (p % k == 0) prime = false;
    if (prime && n % p == 0 && is_power(a, p)) return true;
  }
  return n % 4 == 0 && a < 0 && a % 4 == 0 && is_power(-a / 4, 4);
}

bool factor_oracle(const UniPoly& f, long a) {
  return factor_q(f - UniPoly::constant(NFElement(rationals(), a))).count_with_multiplicity() > 1;
}

std::vector<long> values(const std::vector<PredictedValue>& v) {
  std::vector<long> out;
  for (auto& x : v) out.push_back(x.a);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("scan examples") {
  CHECK(scan_red(P("x^2"), 10).reducible_a == std::vector<long>{0, 1, 4, 9});
  CHECK(scan_red(P("x^4"), 20).reducible_a == std::vector<long>{-4, 0, 1, 4, 9, 16});
  CHECK(scan_red(P("x^3"), 8).reducible_a == std::vector<long>{-8, -1, 0, 1, 8});
}

TEST_CASE("scan of monomials matches Capelli") {
  for (int n = 2; n <= 8; ++n) {
    UniPoly f = P("x^" + std::to_string(n));
    auto got = scan_red(f, 300, 2).reducible_a;
    std::vector<long> want;
    for (long a = -300; a <= 300; ++a)
      if (capelli(a, n)) want.push_back(a);
    CHECK_MESSAGE(got == want, "n=" << n);
  }
}

TEST_CASE("parallel scan equals serial reference and factor oracle") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    int d = 2 + static_cast<int>(rng() % 5);
    UniPoly f = testgen::random_poly(rng, d, 5);
    if (f.degree() < 2) continue;
    auto par = scan_red(f, 60, 3).reducible_a;
    CHECK(par == scan_red_serial(f, 60));
    CHECK(scan_red_values(f, 60, 4) == par);
    for (long a = -60; a <= 60; a += 7)
      CHECK(std::binary_search(par.begin(), par.end(), a) == factor_oracle(f, a));
  }
}

TEST_CASE("predicted values") {
  auto p4 = values(predicted_red(P("x^4"), 20));
  CHECK(p4 == std::vector<long>{0, 1, 4, 9, 16});
  auto p6 = values(predicted_red(P("x^6"), 70));
  std::vector<long> want;
  for (long a = -70; a <= 70; ++a)
    if (is_power(a, 2) || is_power(a, 3)) want.push_back(a);
  CHECK(p6 == want);
  auto p5 = values(predicted_red(P("x^5+x"), 1000));
  CHECK(p5 == std::vector<long>{-246, -34, -2, 0, 2, 34, 246});
  for (auto& v : predicted_red(P("x^4"), 20)) CHECK(!v.source.empty());
}

TEST_CASE("residuals") {
  auto r4 = residual_analysis(P("x^4"), 20);
  CHECK(r4.residual == std::vector<long>{-4});
  CHECK(r4.degree_2_or_4_factor);
  auto r3 = residual_analysis(P("x^3"), 200);
  CHECK(r3.residual.empty());
  CHECK(!r3.degree_2_or_4_factor);
  auto r6 = residual_analysis(P("x^6+2x^4+x^2"), 200);
  CHECK(r6.residual.empty());
  CHECK(r6.degree_2_or_4_factor);
  auto r5 = residual_analysis(P("x^5-x-1"), 30);
  CHECK(r5.degree5_nonsolvable);
  CHECK(!residual_analysis(P("x^5"), 30).degree5_nonsolvable);
}

TEST_CASE("scan invariants") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 6; ++trial) {
    UniPoly f = compose(testgen::random_poly(rng, 2 + static_cast<int>(rng() % 2), 4),
                        testgen::random_poly(rng, 2, 4));
    if (f.degree() < 2) continue;
    ScanReport small = scan_red(f, 40), big = scan_red(f, 120, 2);
    std::vector<long> prefix;
    for (long a : big.reducible_a)
      if (a >= -40 && a <= 40) prefix.push_back(a);
    CHECK(prefix == small.reducible_a);
    auto pv = values(big.predicted);
    CHECK(std::includes(big.reducible_a.begin(), big.reducible_a.end(), pv.begin(), pv.end()));
  }
}

TEST_CASE("stability") {
  auto s = stability_scan(P("x^2"), 2, 100);
  CHECK(std::find(s.difference.begin(), s.difference.end(), -4) != s.difference.end());
  CHECK(std::find(s.difference.begin(), s.difference.end(), -64) != s.difference.end());
  CHECK(stability_scan(P("x^3"), 2, 100).difference.empty());
  auto t = stability_scan(P("x^2+1"), 2, 50);
  CHECK(std::includes(t.red_iterate.begin(), t.red_iterate.end(), t.red_f.begin(), t.red_f.end()));
  try {
    stability_scan(P("x^3"), 6, 10);
    FAIL("expected SizeLimit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeLimit);
  }
}

TEST_CASE("residual of cubic composites is stable") {
  std::mt19937 rng(31);
  int ran = 0;
  for (int trial = 0; trial < 2; ++trial) {
    UniPoly f = compose(testgen::random_poly(rng, 3, 5), testgen::random_poly(rng, 3, 5));
    if (f.degree() != 9) continue;
    auto r500 = residual_analysis(f, 500, 2).residual;
    auto r2000 = residual_analysis(f, 2000, 2).residual;
    CHECK(r500 == r2000);
    CHECK(r2000.empty());
    ++ran;
  }
  CHECK(ran == 2);
}
