#include <benchmark/benchmark.h>

#include <random>

#include "transvect/cayley.hpp"
#include "transvect/classify.hpp"

using namespace transvect;

namespace {

Matrix random_matrix(const Field& F, std::size_t n, std::mt19937_64& rng) {
  Matrix m(F, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Elem>(rng() % F.order());
  return m;
}

void BM_FieldMul(benchmark::State& state) {
  const Field F = Field::create(2, static_cast<std::uint32_t>(state.range(0)));
  std::mt19937_64 rng(1);
  std::vector<Elem> xs(1024);
  for (auto& x : xs) x = static_cast<Elem>(rng() % F.order());
  Elem acc = 1;
  for (auto _ : state) {
    for (Elem x : xs) acc = F.mul(acc, x) ^ 1;
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(8)->Arg(16);

void BM_Rref(benchmark::State& state) {
  const Field F = Field::create(3, 2);
  std::mt19937_64 rng(2);
  const Matrix m = random_matrix(F, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(32)->Arg(64);

void BM_EnumerateSp4_2(benchmark::State& state) {
  const auto gens = matrices(build_symmetric_rep(6));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_group(gens).size());
}
BENCHMARK(BM_EnumerateSp4_2)->Unit(benchmark::kMillisecond);

void BM_EnumerateSL3_3(benchmark::State& state) {
  const auto gens = matrices(elementary_generators(3, Field::create(3, 1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_group(gens).size());
}
BENCHMARK(BM_EnumerateSL3_3)->Unit(benchmark::kMillisecond);

void BM_BfsSymmetric(benchmark::State& state) {
  const auto gens = matrices(build_symmetric_rep(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(bfs_explore(gens).diameter());
}
BENCHMARK(BM_BfsSymmetric)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
