#include <benchmark/benchmark.h>

#include "smoothcolor/coloring.hpp"
#include "smoothcolor/groups.hpp"
#include "smoothcolor/strong_reps.hpp"

using namespace smoothcolor;

static void BM_powmod(benchmark::State& state) {
    u64 x = 3037000499ULL;
    for (auto _ : state)
        benchmark::DoNotOptimize(powmod(x, 162802814486ULL, 5209690063553ULL));
}
BENCHMARK(BM_powmod);

static void BM_is_prime(benchmark::State& state) {
    u64 p = 5209690063553ULL;
    for (auto _ : state) benchmark::DoNotOptimize(is_prime_u64(p));
}
BENCHMARK(BM_is_prime);

static void BM_enumerate_smooth(benchmark::State& state) {
    SmoothContext ctx(static_cast<u64>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ctx.enumerate(1'000'000));
}
BENCHMARK(BM_enumerate_smooth)->Arg(6)->Arg(10)->Arg(24);

static void BM_strong_rep_test(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(is_strong_representative(13, 198364));
}
BENCHMARK(BM_strong_rep_test);

static void BM_strong_rep_scan_block(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(smallest_strong_representative(7, 1'000, 1));
}
BENCHMARK(BM_strong_rep_scan_block);

static void BM_verify_satisfactory(benchmark::State& state) {
    SmoothContext ctx(6);
    Coloring c(ctx, PowerResidueColoring{17, 103});
    for (auto _ : state) benchmark::DoNotOptimize(verify_satisfactory(c, 1'000'000));
}
BENCHMARK(BM_verify_satisfactory);

static void BM_group_search_order8(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(satisfactory_groups(8, {8}));
}
BENCHMARK(BM_group_search_order8);

static void BM_groupless(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(is_groupless(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_groupless)->Arg(100)->Arg(195);

BENCHMARK_MAIN();
