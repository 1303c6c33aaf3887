#include <map>

// Parallel kernels against their serial references. Arg 0 = parallel, 1 = serial.

#include <benchmark/benchmark.h>

#include "sptri/exact_linalg.hpp"
#include "sptri/invariant_count.hpp"
#include "sptri/modular.hpp"

using namespace sptri;

namespace
{

Execution exec_of(benchmark::State const &state)
{
  return state.range(1) == 0 ? Execution::parallel : Execution::serial;
}

SparseMatQ const &matrix_at(int n)
{
  static std::map<int, SparseMatQ> cache;
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, distribution_matrix(sample_point(n, 100, 1, 0)).matrix).first;
  return it->second;
}

void BM_Assembly(benchmark::State &state)
{
  Trivector const theta = sample_point(static_cast<int>(state.range(0)), 100, 1, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(distribution_matrix(theta, exec_of(state)));
}

void BM_BareissRank(benchmark::State &state)
{
  MatQ const m = matrix_at(static_cast<int>(state.range(0))).to_dense();
  for (auto _ : state)
    benchmark::DoNotOptimize(bareiss_rank(m, exec_of(state)));
}

void BM_BareissSparse(benchmark::State &state)
{
  SparseMatQ const &m = matrix_at(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(bareiss_rank_sparse(m, exec_of(state)));
}

void BM_ModularRank(benchmark::State &state)
{
  SparseMatQ const &m = matrix_at(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(modular_rank(m, kDefaultPrime, exec_of(state)));
}

void BM_GenericRank(benchmark::State &state)
{
  RankOptions opts;
  opts.cross_check = false;
  int const n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(generic_rank(n, 4, 100, 3, opts));
}

} // namespace

BENCHMARK(BM_Assembly)->ArgsProduct({{8, 14, 20}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BareissRank)->ArgsProduct({{5, 6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BareissSparse)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ModularRank)->ArgsProduct({{8, 14, 20}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenericRank)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
