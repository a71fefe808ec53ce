#include <benchmark/benchmark.h>

#include <random>

#include "mtutte/constructors.hpp"
#include "mtutte/engines.hpp"
#include "mtutte/extreme.hpp"

using namespace mtutte;

namespace {

Matroid k4() {
  return graphic_matroid(MultigraphSpec{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}});
}

IntegerMatrixSpec dense_matrix(int rows, int cols, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  IntegerMatrixSpec spec;
  spec.rows.resize(static_cast<std::size_t>(rows));
  for (auto& row : spec.rows)
    for (int c = 0; c < cols; ++c) row.push_back(mpz_class{entry(rng)});
  return spec;
}

void BM_definition_uniform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matroid m = uniform_matroid(n / 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(tutte_definition(m));
}
BENCHMARK(BM_definition_uniform)->Arg(8)->Arg(12)->Arg(16)->Arg(18);

void BM_deletion_contraction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matroid m = uniform_matroid(n / 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(tutte_deletion_contraction(m));
}
BENCHMARK(BM_deletion_contraction)->Arg(8)->Arg(10)->Arg(12);

void BM_activity_expansion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matroid m = uniform_matroid(n / 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(tutte_by_activities(m).polynomial);
}
BENCHMARK(BM_activity_expansion)->Arg(8)->Arg(12)->Arg(14);

void BM_convolution_k4(benchmark::State& state) {
  MultiplicityMatroid mm = MultiplicityMatroid::trivial(k4());
  for (auto _ : state) benchmark::DoNotOptimize(convolution_tutte(mm));
}
BENCHMARK(BM_convolution_k4);

void BM_matrix_realization(benchmark::State& state) {
  const int cols = static_cast<int>(state.range(0));
  IntegerMatrixSpec spec = dense_matrix(4, cols, 0xBE9Cu);
  for (auto _ : state) benchmark::DoNotOptimize(from_integer_matrix(spec));
}
BENCHMARK(BM_matrix_realization)->Arg(6)->Arg(8)->Arg(10);

void BM_extreme_top_k4(benchmark::State& state) {
  MultiplicityMatroid mm = MultiplicityMatroid::trivial(k4());
  for (auto _ : state) benchmark::DoNotOptimize(extreme_b_top(mm));
}
BENCHMARK(BM_extreme_top_k4);

void BM_b_grid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  MultiplicityMatroid mm = MultiplicityMatroid::trivial(uniform_matroid(n / 2, n));
  for (auto _ : state)
    benchmark::DoNotOptimize(b_grid_general(mm, mm.matroid().rank(), n - mm.matroid().rank()));
}
BENCHMARK(BM_b_grid)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
