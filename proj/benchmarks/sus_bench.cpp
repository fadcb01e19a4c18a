#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "sus/pipeline.hpp"
#include "sus/suffix_array.hpp"

namespace {

std::string dna(std::size_t n) {
  static constexpr char kBases[] = {'A', 'C', 'G', 'T'};
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> dist(0, 3);
  std::string s(n, '\0');
  for (auto& c : s) c = kBases[dist(rng)];
  return s;
}

void BM_SuffixArray(benchmark::State& state) {
  const std::string s = dna(static_cast<std::size_t>(state.range(0)));
  const sus::Text text(s);
  sus::WorkBuffers buffers(text.size());
  for (auto _ : state) {
    buffers.reset(text.size());
    sus::build_suffix_array(text, buffers);
    benchmark::DoNotOptimize(buffers.a().data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SuffixArray)
    ->RangeMultiplier(4)
    ->Range(1 << 12, 1 << 22)
    ->Complexity(benchmark::oN)
    ->Unit(benchmark::kMillisecond);

void BM_FindAllSusExact(benchmark::State& state) {
  const std::string s = dna(static_cast<std::size_t>(state.range(0)));
  const sus::Text text(s);
  sus::WorkBuffers buffers(text.size());
  for (auto _ : state) {
    const auto table = sus::find_all_sus_into(text, 0, buffers);
    benchmark::DoNotOptimize(table.start(0));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindAllSusExact)
    ->RangeMultiplier(4)
    ->Range(1 << 12, 1 << 22)
    ->Complexity(benchmark::oN)
    ->Unit(benchmark::kMillisecond);

void BM_FindAllSusApprox(benchmark::State& state) {
  const std::string s = dna(static_cast<std::size_t>(state.range(0)));
  const sus::Text text(s);
  const sus::Word k = state.range(1);
  sus::WorkBuffers buffers(text.size());
  for (auto _ : state) {
    const auto table = sus::find_all_sus_into(text, k, buffers);
    benchmark::DoNotOptimize(table.start(0));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindAllSusApprox)
    ->ArgsProduct({{1 << 10, 1 << 11, 1 << 12, 1 << 13}, {1, 4}})
    ->Complexity(benchmark::oNSquared)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
