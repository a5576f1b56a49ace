#include <benchmark/benchmark.h>

#include "stohf/atom_model.hpp"
#include "stohf/optimizer.hpp"
#include "stohf/quadrature_oracle.hpp"
#include "stohf/reference_data.hpp"

using namespace stohf;

static void BM_IntegralSet(benchmark::State& state) {
    const int Z = static_cast<int>(state.range(0));
    const Exponents exps = reference_row(Z).exponents();
    for (auto _ : state)
        benchmark::DoNotOptimize(integral_set(exps, Z));
}
BENCHMARK(BM_IntegralSet)->Arg(2)->Arg(6)->Arg(10);

static void BM_Energy(benchmark::State& state) {
    const int Z = static_cast<int>(state.range(0));
    const Exponents exps = reference_row(Z).exponents();
    for (auto _ : state)
        benchmark::DoNotOptimize(energy(Z, exps));
}
BENCHMARK(BM_Energy)->Arg(2)->Arg(6)->Arg(10);

static void BM_Minimize(benchmark::State& state) {
    const int Z = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(minimize(Z));
}
BENCHMARK(BM_Minimize)->Arg(2)->Arg(6)->Arg(10)
    ->Unit(benchmark::kMillisecond);

static void BM_OracleCoulomb(benchmark::State& state) {
    const Exponents exps = reference_row(10).exponents();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            oracle::coulomb(CoulombPair::J2s2p, exps));
}
BENCHMARK(BM_OracleCoulomb)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
