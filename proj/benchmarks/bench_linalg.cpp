#include <benchmark/benchmark.h>

#include "eisrel/basis.hpp"
#include "eisrel/relation.hpp"

namespace {

void BM_BasisRank(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto dim = static_cast<std::size_t>(eisrel::dim_modular_forms(k));
    const auto m = eisrel::basis_matrix(k, dim + 10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eisrel::rref(m));
    }
}
BENCHMARK(BM_BasisRank)->Arg(12)->Arg(60)->Arg(100);

void BM_RelationMatrixRank(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto m = eisrel::relation_matrix(k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eisrel::rref(m));
    }
}
BENCHMARK(BM_RelationMatrixRank)->Arg(12)->Arg(24)->Arg(40);

void BM_Decompose(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const auto dim = static_cast<std::size_t>(eisrel::dim_modular_forms(k));
    const eisrel::QSeries target = eisrel::eisenstein_product(2, k - 2, dim + 10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eisrel::decompose(target, k));
    }
}
BENCHMARK(BM_Decompose)->Arg(12)->Arg(36)->Arg(60);

}  // namespace
