#include <benchmark/benchmark.h>

#include "eisrel/number_theory.hpp"
#include "eisrel/qseries.hpp"

namespace {

void BM_Bernoulli(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eisrel::bernoulli(n));
    }
}
BENCHMARK(BM_Bernoulli)->Arg(50)->Arg(100)->Arg(200);

void BM_Eisenstein(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto precision = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eisrel::eisenstein(k, precision));
    }
}
BENCHMARK(BM_Eisenstein)->Args({4, 40})->Args({12, 100})->Args({40, 200});

void BM_SeriesMul(benchmark::State& state) {
    const auto precision = static_cast<std::size_t>(state.range(0));
    const eisrel::QSeries f = eisrel::eisenstein(4, precision);
    const eisrel::QSeries g = eisrel::eisenstein(6, precision);
    for (auto _ : state) {
        benchmark::DoNotOptimize(f * g);
    }
}
BENCHMARK(BM_SeriesMul)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

void BM_ModularProduct(benchmark::State& state) {
    const auto precision = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eisrel::eisenstein_product(2, 10, precision));
    }
}
BENCHMARK(BM_ModularProduct)->Arg(40)->Arg(100);

}  // namespace
