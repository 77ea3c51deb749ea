#include <benchmark/benchmark.h>

#include <random>

#include "qfermat/census.hpp"
#include "qfermat/hilb1.hpp"
#include "qfermat/koszul.hpp"
#include "qfermat/skew_poly.hpp"

namespace {

using namespace qfermat;

QuantumParams sample_params(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<int> upper(static_cast<std::size_t>(n * (n - 1) / 2));
  for (auto& v : upper) v = static_cast<int>(rng() % static_cast<unsigned>(n));
  return from_upper_triangle(n, upper);
}

void BM_Census(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(run_census(n, {.workers = workers}).count_generic_and_cy);
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * census_size(n)));
}
BENCHMARK(BM_Census)->Args({4, 1})->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond);

void BM_MultiplyA(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = sample_params(n, 1);
  SkewPoly f(p, Algebra::A);
  SkewPoly g(p, Algebra::A);
  for (int i = 0; i < n; ++i) {
    f += SkewPoly::generator(p, Algebra::A, i);
    g += SkewPoly::generator(p, Algebra::A, (i + 1) % n) * SkewPoly::generator(p, Algebra::A, i);
  }
  for (auto _ : state) {
    SkewPoly h = f;
    for (int k = 0; k < n; ++k) h = h * g;
    benchmark::DoNotOptimize(h.terms().size());
  }
}
BENCHMARK(BM_MultiplyA)->Arg(3)->Arg(4)->Arg(5);

void BM_FermatCentral(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = fermat_element(sample_params(n, 2), Algebra::B);
  for (auto _ : state) benchmark::DoNotOptimize(is_central(f));
}
BENCHMARK(BM_FermatCentral)->Arg(4)->Arg(6)->Arg(8);

void BM_FrobeniusBruteForce(benchmark::State& state) {
  const auto p = sample_params(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_bruteforce(p).scalars.size());
}
BENCHMARK(BM_FrobeniusBruteForce)->DenseRange(3, 8);

void BM_Hilb1(benchmark::State& state) {
  const auto p = sample_params(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(hilb1(p, Algebra::A).components.size());
}
BENCHMARK(BM_Hilb1)->Arg(5)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
