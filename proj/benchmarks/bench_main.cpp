#include <benchmark/benchmark.h>

#include "singspec/catalog.hpp"

using namespace singspec;

namespace {

Polynomial na_r0(long r) { return instantiate(Catalog::builtin().find("NA_{r,0}"), {{"r", r}}); }
Polynomial va_rs(long r) { return instantiate(Catalog::builtin().find("VA_{r,s}"), {{"r", r}, {"s", 1}}); }

void BM_MilnorNA(benchmark::State& state) {
  Polynomial f = na_r0(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(milnor_number(f));
}
BENCHMARK(BM_MilnorNA)->Arg(1)->Arg(5)->Arg(10);

void BM_TjurinaVA(benchmark::State& state) {
  Polynomial f = va_rs(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tjurina_number(f));
}
BENCHMARK(BM_TjurinaVA)->Arg(1)->Arg(5)->Arg(10);

void BM_SpectrumNA(benchmark::State& state) {
  Polynomial f = na_r0(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_newton(f));
}
BENCHMARK(BM_SpectrumNA)->Arg(1)->Arg(5)->Arg(10);

void BM_SpectrumVA(benchmark::State& state) {
  Polynomial f = va_rs(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum_newton(f));
}
BENCHMARK(BM_SpectrumVA)->Arg(1)->Arg(5)->Arg(10);

void BM_ExclusionReport(benchmark::State& state) {
  Polynomial f = na_r0(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exclusion_report(f));
}
BENCHMARK(BM_ExclusionReport)->Arg(1)->Arg(5);

void BM_VerifyFamily(benchmark::State& state) {
  const auto& fam = Catalog::builtin().find("VA_{r,s}");
  for (auto _ : state) benchmark::DoNotOptimize(verify(fam, {{"r", state.range(0)}, {"s", 2}}));
}
BENCHMARK(BM_VerifyFamily)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
