#include "dls/scan.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "dls/decompose.hpp"
#include "dls/factor.hpp"
#include "dls/grouplab.hpp"
#include "dls/zfactor.hpp"

namespace dls {

namespace {

struct IntPoly {
  ZVec F;
  mpz_class D;
};

IntPoly integral(const UniPoly& f) {
  if (!f.is_rational()) throw Error(ErrorKind::BadParameters, "scanner needs a polynomial over Q");
  if (f.degree() < 2) throw Error(ErrorKind::PreconditionViolated, "scanner needs degree >= 2");
  QVec c = f.rational_coeffs();
  IntPoly p{{}, 1};
  for (auto& x : c) p.D = lcm(p.D, mpz_class(x.get_den()));
  for (auto& x : c) p.F.push_back(mpz_class(x * p.D));
  return p;
}

const uint64_t kQuickPrimes[] = {101, 103, 107, 109, 113, 127};

bool reducible_kernel(const IntPoly& p, long a) {
  ZVec G = p.F;
  G[0] -= p.D * a;
  for (uint64_t q : kQuickPrimes) {
    if (!squarefree_mod_p(G, q)) continue;
    if (degree_pattern_mod_p(G, q).size() == 1) return false;
  }
  ZFactorization fz = factor_z(G);
  int count = 0;
  for (auto& [g, m] : fz.factors) count += m;
  return count > 1;
}

std::vector<long> red_set(const IntPoly& p, long N, int threads) {
  std::vector<char> hit(2 * N + 1, 0);
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads) if (threads > 1)
  for (long i = 0; i <= 2 * N; ++i) hit[i] = reducible_kernel(p, i - N);
  std::vector<long> out;
  for (long i = 0; i <= 2 * N; ++i)
    if (hit[i]) out.push_back(i - N);
  return out;
}

}  // namespace

bool fiber_reducible(const UniPoly& f, long a) { return reducible_kernel(integral(f), a); }

std::vector<long> scan_red_values(const UniPoly& f, long N, int threads) {
  return red_set(integral(f), N, threads);
}

std::vector<long> scan_red_serial(const UniPoly& f, long N) {
  IntPoly p = integral(f);
  std::vector<long> out;
  for (long a = -N; a <= N; ++a)
    if (reducible_kernel(p, a)) out.push_back(a);
  return out;
}

ScanReport scan_red(const UniPoly& f, long N, int threads) {
  if (N < 1) throw Error(ErrorKind::BadParameters, "N must be positive");
  auto t0 = std::chrono::steady_clock::now();
  ScanReport r;
  r.f = f;
  r.N = N;
  r.reducible_a = red_set(integral(f), N, threads);
  r.factorizations = 2 * N + 1;
  r.predicted = predicted_red(f, N, threads);
  std::vector<long> pa;
  for (auto& v : r.predicted) pa.push_back(v.a);
  pa.erase(std::unique(pa.begin(), pa.end()), pa.end());
  std::set_difference(r.reducible_a.begin(), r.reducible_a.end(), pa.begin(), pa.end(),
                      std::back_inserter(r.residual));
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<PredictedValue> predicted_red(const UniPoly& f, long N, int threads) {
  integral(f);
  std::vector<UniPoly> lefts;
  for (auto& [h, h1] : left_factors(f)) lefts.push_back(h);
  const NumberField& Q = f.field();
  std::vector<std::vector<PredictedValue>> per(2 * N + 1);
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads) if (threads > 1)
  for (long i = 0; i <= 2 * N; ++i) {
    long a = i - N;
    for (auto& h : lefts)
      if (!rational_roots(h - UniPoly::constant(NFElement(Q, a))).empty()) per[i].push_back({a, h.str()});
  }
  std::vector<PredictedValue> out;
  for (auto& v : per) out.insert(out.end(), v.begin(), v.end());
  return out;
}

ResidualReport residual_analysis(const UniPoly& f, long N, int threads) {
  ResidualReport rep;
  rep.scan = scan_red(f, N, threads);
  rep.residual = rep.scan.residual;
  for (auto& d : complete_decompositions(f))
    for (auto& g : d.factors)
      if (g.degree() == 2 || g.degree() == 4) rep.degree_2_or_4_factor = true;
  if (rep.degree_2_or_4_factor) rep.notes.push_back("f factors through an indecomposable of degree 2 or 4");
  for (auto& [h, h1] : left_factors(f)) {
    if (h.degree() != 5) continue;
    ProbeReport pr = monodromy_probe(h, 60, 1, {}, false);
    for (auto& [t, n] : pr.types)
      if (std::find(t.begin(), t.end(), 3) != t.end()) rep.degree5_nonsolvable = true;
    if (rep.degree5_nonsolvable) rep.notes.push_back("degree-5 left factor " + h.str() + " shows a 3-cycle");
  }
  if (!rep.degree_2_or_4_factor && !rep.degree5_nonsolvable)
    rep.notes.push_back("residual expected finite");
  return rep;
}

StabilityReport stability_scan(const UniPoly& f, int n, long N, int threads, int max_degree) {
  if (n < 2) throw Error(ErrorKind::BadParameters, "n must be at least 2");
  IntPoly base = integral(f);
  long deg = 1;
  for (int i = 0; i < n; ++i) {
    deg *= f.degree();
    if (deg > max_degree) throw Error(ErrorKind::SizeLimit, "iterate degree exceeds " + std::to_string(max_degree));
  }
  StabilityReport r;
  r.iterate = f;
  for (int i = 1; i < n; ++i) r.iterate = compose(f, r.iterate);
  r.red_f = red_set(base, N, threads);
  r.red_iterate = red_set(integral(r.iterate), N, threads);
  std::set_difference(r.red_iterate.begin(), r.red_iterate.end(), r.red_f.begin(), r.red_f.end(),
                      std::back_inserter(r.difference));
  return r;
}

}  // namespace dls
