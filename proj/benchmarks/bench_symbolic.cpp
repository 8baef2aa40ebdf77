#include <benchmark/benchmark.h>

#include "eisrel/identities.hpp"

namespace {

void BM_CyclicResidue(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const eisrel::Triple triple(n, n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eisrel::cyclic_pfd_residue(triple));
    }
}
BENCHMARK(BM_CyclicResidue)->Arg(3)->Arg(6)->Arg(9);

void BM_PfdResidue(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eisrel::pfd_residue(n, n));
    }
}
BENCHMARK(BM_PfdResidue)->Arg(5)->Arg(10)->Arg(20);

void BM_DifferenceOperator(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const eisrel::Triple triple(n, n, n);
    eisrel::LaurentPoly3 poles;
    poles.add_term(-1, -1, 0, eisrel::Rational(1));
    poles.add_term(0, -1, -1, eisrel::Rational(1));
    poles.add_term(-1, 0, -1, eisrel::Rational(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eisrel::apply_difference_operator(triple, poles));
    }
}
BENCHMARK(BM_DifferenceOperator)->Arg(3)->Arg(5)->Arg(7);

}  // namespace
