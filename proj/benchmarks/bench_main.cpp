#include "klspecht/cob.hpp"
#include "klspecht/heckemod.hpp"
#include "klspecht/specht.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace klspecht;

// Full group, empty J: the largest module at each rank.
void BM_KLTableA(benchmark::State& state) {
  const auto type = WeylType::a(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto ctx = ParabolicContext::create(type, {});
    benchmark::DoNotOptimize(compute_kl_table(ctx, KLSide::Positive));
  }
}
BENCHMARK(BM_KLTableA)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_KLTableB(benchmark::State& state) {
  const auto type = WeylType::b(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto ctx = ParabolicContext::create(type, {});
    benchmark::DoNotOptimize(compute_kl_table(ctx, KLSide::Negative));
  }
}
BENCHMARK(BM_KLTableB)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_CMatrix(benchmark::State& state) {
  const auto shape = state.range(0) == 0 ? Composition::type_a({3, 2, 1}) : Composition::type_b({1, 2, 1, 2, 1});
  state.SetLabel(shape.label());
  for (auto _ : state) benchmark::DoNotOptimize(c_matrix(shape));
}
BENCHMARK(BM_CMatrix)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Discovery(benchmark::State& state) {
  const auto instances = certification_instances(4, 2);
  const unsigned threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(discover_conventions(instances, {}, threads));
}
BENCHMARK(BM_Discovery)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
