#include "stair/capacities.hpp"
#include "stair/embedfn.hpp"
#include "stair/numtheory.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace stair;

const NegativeWeightExpansion& target() {
    static const NegativeWeightExpansion X = NegativeWeightExpansion::parse("4;2,1");
    return X;
}

void BM_seq_sub(benchmark::State& state) {
    const auto exec = state.range(0) ? Exec::parallel : Exec::serial;
    const std::size_t n = static_cast<std::size_t>(state.range(1));
    const CapacitySequence S = ech_ball(4, 4 * n), T = ech_ball(2, 4 * n);
    for (auto _ : state) benchmark::DoNotOptimize(seq_sub(S, T, n, exec));
}
BENCHMARK(BM_seq_sub)->ArgsProduct({{0, 1}, {2000, 8000}})->ArgNames({"parallel", "window"})->Unit(benchmark::kMillisecond);

void BM_seq_sub_reference(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const CapacitySequence S = ech_ball(4, 4 * n), T = ech_ball(2, 4 * n);
    for (auto _ : state) benchmark::DoNotOptimize(seq_sub_reference(S, T, n));
}
BENCHMARK(BM_seq_sub_reference)->Arg(2000)->Arg(8000)->ArgName("window")->Unit(benchmark::kMillisecond);

void BM_sampling(benchmark::State& state) {
    const auto exec = state.range(0) ? Exec::parallel : Exec::serial;
    static const CapacitySequence c = ech_convex_toric(target(), 20000);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            sample_embedding_function(c, target(), 1, 6, make_rational(1, 50), exec));
}
BENCHMARK(BM_sampling)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_d_series(benchmark::State& state) {
    const auto exec = state.range(0) ? Exec::parallel : Exec::serial;
    const SurdPair pair = surd_pair(target());
    for (auto _ : state) benchmark::DoNotOptimize(d_series(pair, 5000, exec));
}
BENCHMARK(BM_d_series)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
