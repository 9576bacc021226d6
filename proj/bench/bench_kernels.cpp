// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "ecodyck/dyck_path.hpp"
#include "ecodyck/rule_operator.hpp"
#include "ecodyck/sequence.hpp"

using namespace ecodyck;

namespace {

void BM_apply_L_reference(benchmark::State& state)
{
    const auto p = p_bipoly(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(apply_L_reference(p));
}

void BM_apply_L(benchmark::State& state)
{
    const auto p = p_bipoly(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(apply_L(p));
}

void BM_rank_histogram_serial(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(rank_histogram_serial(static_cast<std::size_t>(state.range(0))));
}

void BM_rank_histogram(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(rank_histogram(static_cast<std::size_t>(state.range(0))));
}

void BM_sweep_serial(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(conjecture_sweep(n, Route::fast, {}, Execution::serial));
}

void BM_sweep_parallel(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(conjecture_sweep(n, Route::fast, {}, Execution::parallel));
}

} // namespace

BENCHMARK(BM_apply_L_reference)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_apply_L)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_histogram_serial)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank_histogram)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_serial)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sweep_parallel)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
