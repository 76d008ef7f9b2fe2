#include <benchmark/benchmark.h>

#include "equidesign/design_gen.hpp"
#include "equidesign/screening.hpp"

namespace {

using namespace equi;

void BM_GenG(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gen_G(d, 64));
}
BENCHMARK(BM_GenG)->Arg(12)->Arg(20)->Arg(40);

void BM_GenH(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gen_H(d, 64));
}
BENCHMARK(BM_GenH)->Arg(12)->Arg(20)->Arg(40);

void BM_GenM(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gen_M(d, 64));
}
BENCHMARK(BM_GenM)->Arg(14)->Arg(20)->Arg(40);

void BM_EdgeProfile(benchmark::State& state) {
  const DesignPoly p = gen_G(static_cast<int>(state.range(0)), 256);
  for (auto _ : state) benchmark::DoNotOptimize(edge_profile(p));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.size()));
}
BENCHMARK(BM_EdgeProfile)->Arg(12)->Arg(30)->Arg(60);

void BM_Oracle(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_size_oracle(4, m));
}
BENCHMARK(BM_Oracle)->DenseRange(1, 8)->Unit(benchmark::kMillisecond);

void BM_Screen(benchmark::State& state) {
  ScreenConfig c;
  c.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_screen(c));
    ++c.seed;
  }
}
BENCHMARK(BM_Screen)->Arg(1)->Arg(4)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
