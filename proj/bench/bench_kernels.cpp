#include <benchmark/benchmark.h>

#include "dls/grouplab.hpp"
#include "dls/parse.hpp"
#include "dls/scan.hpp"

using namespace dls;

namespace {

UniPoly cubic_composite() { return parse_uni("(x^3-2x+5)^3+(x^3-2x+5)-4", rationals()); }

void BM_ScanSerial(benchmark::State& st) {
  UniPoly f = cubic_composite();
  for (auto _ : st) benchmark::DoNotOptimize(scan_red_serial(f, st.range(0)));
}
BENCHMARK(BM_ScanSerial)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_ScanParallel(benchmark::State& st) {
  UniPoly f = cubic_composite();
  for (auto _ : st) benchmark::DoNotOptimize(scan_red_values(f, 500, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_ScanParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_StabilityX2(benchmark::State& st) {
  UniPoly f = parse_uni("x^2+1", rationals());
  for (auto _ : st) benchmark::DoNotOptimize(stability_scan(f, 3, 300, static_cast<int>(st.range(0))).difference);
}
BENCHMARK(BM_StabilityX2)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Enum8(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_deg8_full_cycle(static_cast<int>(st.range(0))).size());
}
BENCHMARK(BM_Enum8)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Deg8Scan(benchmark::State& st) {
  auto groups = enumerate_deg8_full_cycle(1);
  for (auto _ : st) benchmark::DoNotOptimize(deg8_minimal_reducibility_scan(groups, static_cast<int>(st.range(0))).survivors);
}
BENCHMARK(BM_Deg8Scan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
