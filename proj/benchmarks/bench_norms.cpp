#include <benchmark/benchmark.h>

#include <random>

#include "hofa/multifunction.hpp"

using namespace hofa;

namespace {

GroupFunction random_function(const FiniteAbelianGroup& g, std::uint64_t seed) {
  std::mt19937_64 r(seed);
  GroupFunction f = make_zero(g);
  for (cplx& v : f.values) {
    const double re = 2.0 * (static_cast<double>(r() >> 11) * 0x1.0p-53) - 1.0;
    const double im = 2.0 * (static_cast<double>(r() >> 11) * 0x1.0p-53) - 1.0;
    v = cplx{re, im};
  }
  return f;
}

void BM_GowersCube(benchmark::State& state) {
  const auto g = FiniteAbelianGroup::make({state.range(0)});
  const int k = static_cast<int>(state.range(1));
  const GroupFunction f = random_function(g, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gowers_norm(f, k, GowersMethod::kCube));
  }
  state.SetComplexityN(state.range(0));
}

void BM_OctahedralFold(benchmark::State& state) {
  const auto g = FiniteAbelianGroup::make({state.range(0)});
  const MultiFunction lifted = sum_lift(random_function(g, 2), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(octahedral_norm(lifted, OctahedralMethod::kFold));
  }
}

void BM_OctahedralBrute(benchmark::State& state) {
  const auto g = FiniteAbelianGroup::make({state.range(0)});
  const MultiFunction lifted = sum_lift(random_function(g, 2), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(octahedral_norm(lifted, OctahedralMethod::kBruteForce));
  }
}

void BM_Fourier(benchmark::State& state) {
  const auto g = FiniteAbelianGroup::make({state.range(0)});
  const GroupFunction f = random_function(g, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fourier(f));
  }
}

}  // namespace

BENCHMARK(BM_GowersCube)->Args({16, 2})->Args({64, 2})->Args({256, 2})->Args({16, 3})->Args({64, 3});
BENCHMARK(BM_OctahedralFold)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(BM_OctahedralBrute)->Arg(16)->Arg(32);
BENCHMARK(BM_Fourier)->Arg(64)->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
