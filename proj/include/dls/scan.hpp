#pragma once

#include <string>
#include <vector>

#include "dls/unipoly.hpp"

namespace dls {

struct PredictedValue {
  long a;
  std::string source;  // left factor f1 with a in f1(Q)
};

struct ScanReport {
  UniPoly f;
  long N = 0;
  std::vector<long> reducible_a;
  std::vector<PredictedValue> predicted;
  std::vector<long> residual;
  long factorizations = 0;
  double seconds = 0;
};

// f(X) - a reducible over Q, multiplicity counted.
bool fiber_reducible(const UniPoly& f, long a);

// {a in [-N, N] : f(X) - a reducible}; OpenMP over a when threads > 1.
ScanReport scan_red(const UniPoly& f, long N, int threads = 1);
// The reducible set alone, OpenMP over a.
std::vector<long> scan_red_values(const UniPoly& f, long N, int threads = 1);
// Plain loop, kept as the reference for scan_red_values.
std::vector<long> scan_red_serial(const UniPoly& f, long N);

// a in f1(Q) for some left factor f1 of degree >= 2; sorted by a, one entry per (a, f1).
std::vector<PredictedValue> predicted_red(const UniPoly& f, long N, int threads = 1);

struct ResidualReport {
  ScanReport scan;
  std::vector<long> residual;
  bool degree_2_or_4_factor = false;  // infinite residual permitted
  bool degree5_nonsolvable = false;   // 3-cycle seen for a degree-5 left factor
  std::vector<std::string> notes;
};
ResidualReport residual_analysis(const UniPoly& f, long N, int threads = 1);

struct StabilityReport {
  UniPoly iterate;
  std::vector<long> red_f, red_iterate, difference;
};
// Red of the n-th iterate minus Red of f on [-N, N].
StabilityReport stability_scan(const UniPoly& f, int n, long N, int threads = 1, int max_degree = 256);

}  // namespace dls
