// Serial reference paths against the OpenMP kernels.
#include <benchmark/benchmark.h>

#include "mhg/algebra.hpp"
#include "mhg/enumerate.hpp"
#include "mhg/sumop.hpp"

using namespace mhg;

namespace {

ParameterSequence main_params() { return ParameterSequence(3, 1, 3, 10, 11); }

EnumOptions with_jobs(int jobs) {
  EnumOptions opt;
  opt.jobs = jobs;
  return opt;
}

// state.range(0): target size; state.range(1): jobs (1 = serial path).
void BM_ExtendLevel(benchmark::State& state) {
  const auto p = main_params();
  const auto levels = enumerate_levels(p, static_cast<int>(state.range(0)) - 1);
  const Level& parents = levels.back();
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    Level out = jobs == 1 ? extend_level_serial(p, parents) : extend_level(p, parents, with_jobs(jobs));
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["types"] = static_cast<double>(extend_level_serial(p, parents).size());
}
BENCHMARK(BM_ExtendLevel)->ArgsProduct({{5, 6}, {1, 0}})->Unit(benchmark::kMillisecond);

void BM_EnumerateLevels(benchmark::State& state) {
  const auto p = main_params();
  const int n = static_cast<int>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto levels = jobs == 1 ? enumerate_levels_serial(p, n) : enumerate_levels(p, n, with_jobs(jobs));
    benchmark::DoNotOptimize(levels.data());
  }
}
BENCHMARK(BM_EnumerateLevels)->ArgsProduct({{6}, {1, 0}})->Unit(benchmark::kMillisecond);

void BM_OrbitProduct(benchmark::State& state) {
  const int jobs = static_cast<int>(state.range(1));
  OrbitAlgebra alg(main_params(), with_jobs(jobs));
  const int half = static_cast<int>(state.range(0)) / 2;
  std::vector<mpq_class> v(alg.types(half).size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = mpq_class(static_cast<long>(i % 5) - 2, 1 + i % 3);
  const OrbitFunction f = alg.sparse(half, v);
  alg.product(f, f);  // builds the subset tables outside the timed loop
  for (auto _ : state) {
    OrbitFunction g = jobs == 1 ? alg.product_serial(f, f) : alg.product(f, f);
    benchmark::DoNotOptimize(g.values.size());
  }
}
BENCHMARK(BM_OrbitProduct)->ArgsProduct({{4, 6}, {1, 0}})->Unit(benchmark::kMillisecond);

void BM_VerifyClosure(benchmark::State& state) {
  const auto p = main_params();
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    Report r = verify_closure(p, 2, static_cast<int>(state.range(0)), jobs);
    benchmark::DoNotOptimize(r.pass);
  }
}
BENCHMARK(BM_VerifyClosure)->ArgsProduct({{6}, {1, 0}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
