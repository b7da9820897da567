#include <benchmark/benchmark.h>

#include <memory>

#include "cca/classify.hpp"
#include "cca/colour_aut.hpp"
#include "cca/decompose.hpp"
#include "cca/verify.hpp"

namespace {

using namespace cca;

constexpr const char* kSpecs[] = {"Q8", "D12", "Dic(Z8)", "Q8xZ2", "Q8xZ3", "Q8xZ2^2"};

std::shared_ptr<const FiniteGroup> group_arg(const benchmark::State& state) {
  return std::make_shared<const FiniteGroup>(build_group(kSpecs[state.range(0)]));
}

void BM_BuildGroup(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_group(kSpecs[state.range(0)]));
  state.SetLabel(kSpecs[state.range(0)]);
}
BENCHMARK(BM_BuildGroup)->DenseRange(0, 5);

void BM_GroupAutomorphisms(benchmark::State& state) {
  const auto G = group_arg(state);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_automorphisms(*G));
  state.SetLabel(G->name());
}
BENCHMARK(BM_GroupAutomorphisms)->DenseRange(0, 5);

void BM_ColourPreservingStabilizer(benchmark::State& state) {
  const auto G = group_arg(state);
  const CayleyGraph K = complete_cayley(G);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_stabilizer(K, AutMode::ColourPreserving));
  state.SetLabel(G->name());
}
BENCHMARK(BM_ColourPreservingStabilizer)->DenseRange(0, 5);

void BM_ColourPermutingStabilizer(benchmark::State& state) {
  const auto G = group_arg(state);
  const CayleyGraph K = complete_cayley(G);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_stabilizer(K, AutMode::ColourPermuting));
  state.SetLabel(G->name());
}
BENCHMARK(BM_ColourPermutingStabilizer)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_CcaStatus(benchmark::State& state) {
  const auto G = group_arg(state);
  const CayleyGraph K = complete_cayley(G);
  for (auto _ : state) benchmark::DoNotOptimize(cca_status(K));
  state.SetLabel(G->name());
}
BENCHMARK(BM_CcaStatus)->DenseRange(0, 5);

void BM_DecomposeStabilizer(benchmark::State& state) {
  const auto G = group_arg(state);
  const CayleyGraph K = complete_cayley(G);
  const AutomorphismSet stab = enumerate_stabilizer(K, AutMode::ColourPermuting);
  for (auto _ : state)
    for (const GroupMap& phi : stab.maps) benchmark::DoNotOptimize(decompose_colour_permuting(K, phi));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * stab.size()));
  state.SetLabel(G->name());
}
BENCHMARK(BM_DecomposeStabilizer)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_D12Scan(benchmark::State& state) {
  for (auto _ : state) {
    Report report;
    benchmark::DoNotOptimize(suite_d12(report));
  }
}
BENCHMARK(BM_D12Scan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
