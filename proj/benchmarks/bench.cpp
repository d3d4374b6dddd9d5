#include <benchmark/benchmark.h>

#include "projbch/analysis.hpp"
#include "projbch/bch.hpp"
#include "projbch/cosets.hpp"
#include "projbch/nds.hpp"

using namespace projbch;

static void BM_FieldMul(benchmark::State& state) {
    auto f = Field::make(3, unsigned(state.range(0)));
    elem_t x = f->generator(), y = 1;
    for (auto _ : state) {
        y = f->mul(y, x);
        benchmark::DoNotOptimize(y);
    }
}
BENCHMARK(BM_FieldMul)->Arg(5)->Arg(10);

// Construction is memoized per (q, m), so after the first iteration this
// times the lookup path every caller actually hits.
static void BM_CosetContextLookup(benchmark::State& state) {
    for (auto _ : state) {
        auto ctx = CosetContext::build(3, unsigned(state.range(0)));
        benchmark::DoNotOptimize(ctx->leaders().size());
    }
}
BENCHMARK(BM_CosetContextLookup)->Arg(8)->Arg(10);

// Strided sweep so the closed-form fast path and the scan fallback both show up.
static void BM_SmallestLeaderGeq(benchmark::State& state) {
    auto ctx = CosetContext::build(3, 8);
    for (auto _ : state) {
        std::uint64_t acc = 0;
        for (std::uint32_t s = 1; s < ctx->n(); s += 97)
            acc += nds::smallest_leader_geq(s, *ctx).value;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_SmallestLeaderGeq);

static void BM_GeneratorConstruction(benchmark::State& state) {
    for (auto _ : state) {
        auto code = build_code(3, unsigned(state.range(0)), 22);
        benchmark::DoNotOptimize(code.generator.degree());
    }
}
BENCHMARK(BM_GeneratorConstruction)->Arg(4)->Arg(6);

static void BM_WeightEnumeration(benchmark::State& state) {
    const auto code = build_code(3, 4, 22);
    for (auto _ : state) {
        auto wd = weight_distribution_bruteforce(code, std::uint64_t(1) << 32);
        benchmark::DoNotOptimize(wd.counts.size());
    }
}
BENCHMARK(BM_WeightEnumeration);

static void BM_FormValueSweep(benchmark::State& state) {
    for (auto _ : state) {
        auto vd = t_value_distribution(3);
        benchmark::DoNotOptimize(vd.entries.size());
    }
}
BENCHMARK(BM_FormValueSweep);

BENCHMARK_MAIN();
