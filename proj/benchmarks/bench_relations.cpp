#include <benchmark/benchmark.h>

#include "eisrel/relation.hpp"

namespace {

void BM_RelationVector(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const eisrel::Triple triple(k / 2, k / 2 - 1, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eisrel::relation_vector(triple));
    }
}
BENCHMARK(BM_RelationVector)->Arg(12)->Arg(24)->Arg(40);

void BM_EvaluateRelation(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const eisrel::RelationVector v =
        eisrel::relation_vector(eisrel::Triple(k / 2, k / 2 - 1, 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eisrel::evaluate_relation(v, 40));
    }
}
BENCHMARK(BM_EvaluateRelation)->Arg(12)->Arg(24)->Arg(40);

void BM_RelationMatrix(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eisrel::relation_matrix(k));
    }
}
BENCHMARK(BM_RelationMatrix)->Arg(12)->Arg(24)->Arg(40);

}  // namespace
