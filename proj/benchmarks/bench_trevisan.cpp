#include <benchmark/benchmark.h>

#include "nmx/rng.hpp"
#include "nmx/trevisan.hpp"
#include "nmx/weak_design.hpp"

using namespace nmx;

static void WeakDesignBuild(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(weak_design(m, 10));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(WeakDesignBuild)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void TrevisanExtract(benchmark::State& state) {
    ExtSpec spec = make_ext_spec(ExtRole::Ext1, 272, 110, 110, 220, 0.01);
    TrevisanExt ext(spec);
    CtrRng rng(3);
    BitString x = rng.bits(spec.n_in);
    BitString seed = rng.bits(spec.d_seed);
    for (auto _ : state) benchmark::DoNotOptimize(ext.extract(x, seed));
}
BENCHMARK(TrevisanExtract);

static void TrevisanExtractTabled(benchmark::State& state) {
    ExtSpec spec = make_ext_spec(ExtRole::Ext1, 272, 110, 110, 220, 0.01);
    TrevisanExt ext(spec);
    CtrRng rng(3);
    BitString x = rng.bits(spec.n_in);
    BitString seed = rng.bits(spec.d_seed);
    std::vector<std::uint32_t> table;
    for (auto _ : state) benchmark::DoNotOptimize(ext.extract_with_cache(x, seed, table));
}
BENCHMARK(TrevisanExtractTabled);

static void OneBitExt(benchmark::State& state) {
    CtrRng rng(4);
    BitString x = rng.bits(64);
    BitString seed = rng.bits(16);
    for (auto _ : state) benchmark::DoNotOptimize(one_bit_ext(x, seed));
}
BENCHMARK(OneBitExt);
