#include <benchmark/benchmark.h>

#include "nmx/oracle.hpp"
#include "nmx/presets.hpp"
#include "nmx/rng.hpp"

using namespace nmx;

static void NmDistanceSeeded(benchmark::State& state) {
    ParamPlan plan = micro_preset("seeded-s1");
    const std::size_t supp = static_cast<std::size_t>(state.range(0));
    std::vector<BitString> support;
    for (std::uint64_t v = 0; v < supp; ++v) support.push_back(BitString::from_uint(v, plan.n));
    JointDist source = JointDist::flat_seeded(support, plan.d);
    TamperSet tampers{TamperSide::Y,
                      {[](const BitString& y) { return y ^ BitString::from_uint(1, y.size()); }}};
    for (auto _ : state) benchmark::DoNotOptimize(nm_distance(source, tampers, plan));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(NmDistanceSeeded)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void ExtDistance(benchmark::State& state) {
    ExtSpec spec = make_ext_spec(ExtRole::Ext1, 8, 4, 2, 4, 0.125);
    std::vector<BitString> support;
    for (std::uint64_t v = 0; v < 64; ++v) support.push_back(BitString::from_uint(v, 8));
    JointDist source = JointDist::flat_seeded(support, 0);
    for (auto _ : state) benchmark::DoNotOptimize(ext_distance(source, spec, true, 1 << 24));
}
BENCHMARK(ExtDistance);

static void StatDistTables(benchmark::State& state) {
    CtrRng rng(10);
    Dist p, q;
    for (int i = 0; i < 256; ++i) {
        p["k" + std::to_string(i)] = Rat(rng.next() % 64 + 1, 16640);
        q["k" + std::to_string(i)] = Rat(rng.next() % 64 + 1, 16640);
    }
    // normalize exactly
    Rat ps = 0, qs = 0;
    for (auto& [k, v] : p) ps += v;
    for (auto& [k, v] : q) qs += v;
    for (auto& [k, v] : p) v /= ps;
    for (auto& [k, v] : q) v /= qs;
    for (auto _ : state) benchmark::DoNotOptimize(stat_dist(p, q));
}
BENCHMARK(StatDistTables);
