#include "brp/construct.hpp"
#include "brp/generator.hpp"
#include "brp/local_search.hpp"

#include <benchmark/benchmark.h>

namespace {

brp::Instance square(int size, brp::HeightPolicy policy)
{
    return brp::generate(brp::GeneratorParams{size, size, policy, 1, 1}, 1);
}

void bm_greedy(benchmark::State& state)
{
    const auto inst = square(static_cast<int>(state.range(0)), brp::HeightPolicy::unlimited);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brp::greedy_solve(inst));
    }
}

void bm_opt_n(benchmark::State& state)
{
    const auto inst = square(static_cast<int>(state.range(0)), brp::HeightPolicy::unlimited);
    const auto sol = brp::greedy_solve(inst);
    const int n = inst.n_containers / 2;
    const auto options = state.range(1) != 0 ? brp::SpeedupOptions{} : brp::SpeedupOptions::none();
    for (auto _ : state) {
        benchmark::DoNotOptimize(brp::opt_n(inst, sol, n, options));
    }
}

void bm_local_search(benchmark::State& state)
{
    const auto inst = square(static_cast<int>(state.range(0)), brp::HeightPolicy::unlimited);
    const auto sol = brp::greedy_solve(inst);
    for (auto _ : state) {
        benchmark::DoNotOptimize(brp::local_search(inst, sol));
    }
}

} // namespace

BENCHMARK(bm_greedy)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_opt_n)->ArgsProduct({{10, 20, 30}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_local_search)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
