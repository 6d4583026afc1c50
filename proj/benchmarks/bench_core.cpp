#include <benchmark/benchmark.h>

#include "adiabatic/evolution.hpp"
#include "adiabatic/hamiltonian.hpp"
#include "adiabatic/schedule.hpp"
#include "adiabatic/spectrum.hpp"

using namespace adiabatic;

static void BM_ApplyHamiltonian(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const auto h = SearchHamiltonian::from_dimension(n, n / 2);
    const auto psi = make_uniform_state(h);
    Amplitudes out(n);
    for (auto _ : state) {
        apply_hamiltonian(h, 0.37, psi.amplitudes(), out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_ApplyHamiltonian)->RangeMultiplier(8)->Range(8, 1 << 20);

static void BM_EvolveFull(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const auto h = SearchHamiltonian::from_dimension(n);
    const auto sch = local_adiabatic_schedule(n, 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(evolve(h, sch).success_probability);
}
BENCHMARK(BM_EvolveFull)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMillisecond);

static void BM_EvolveReduced(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const auto h = SearchHamiltonian::from_dimension(n);
    const auto sch = local_adiabatic_schedule(n, 0.1);
    for (auto _ : state) benchmark::DoNotOptimize(evolve_reduced(h, sch).success_probability);
}
BENCHMARK(BM_EvolveReduced)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMillisecond);

static void BM_Gap(benchmark::State& state) {
    int k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gap(k / 1000.0, 1024));
        k = k < 1000 ? k + 1 : 0;
    }
}
BENCHMARK(BM_Gap);

static void BM_LocalScheduleInverse(benchmark::State& state) {
    const auto sch = local_adiabatic_schedule(1 << 20, 0.1);
    const double total = sch.total_time();
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sch.s_at(t));
        t = t < total - 1.0 ? t + 0.5 : 0.0;
    }
}
BENCHMARK(BM_LocalScheduleInverse);

BENCHMARK_MAIN();
