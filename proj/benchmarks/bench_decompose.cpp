#include <benchmark/benchmark.h>

#include <random>

#include "hofa/decompose.hpp"
#include "hofa/reduce.hpp"

using namespace hofa;

namespace {

GroupFunction noisy_phase(const FiniteAbelianGroup& g, std::uint64_t seed) {
  std::mt19937_64 r(seed);
  std::map<Monomial, std::int64_t, MonomialLess> c;
  c[Monomial{2}] = 1;
  GroupFunction f = phase_eval(make_phase(g.factors()[0], 1, std::move(c)), g);
  for (cplx& v : f.values) {
    v += cplx{0.02 * (static_cast<double>(r() >> 11) * 0x1.0p-53 - 0.5), 0.0};
  }
  return f;
}

void BM_MatchingPursuit(benchmark::State& state) {
  const auto g = FiniteAbelianGroup::make({state.range(0)});
  const GroupFunction f = noisy_phase(g, 1);
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(matching_pursuit(f, k, 0.2, 50));
  }
}

void BM_TreeReduce(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  std::vector<double> values(static_cast<std::size_t>(n));
  std::mt19937_64 r(7);
  for (double& v : values) v = static_cast<double>(r() >> 11) * 0x1.0p-53;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tree_reduce<double>(n, [&](std::int64_t i) { return values[static_cast<std::size_t>(i)]; }));
  }
  state.SetItemsProcessed(state.iterations() * n);
}

}  // namespace

BENCHMARK(BM_MatchingPursuit)->Args({7, 2})->Args({7, 3})->Args({11, 2})->Args({13, 2});
BENCHMARK(BM_TreeReduce)->Arg(1 << 12)->Arg(1 << 16)->Arg(1 << 20);

BENCHMARK_MAIN();
