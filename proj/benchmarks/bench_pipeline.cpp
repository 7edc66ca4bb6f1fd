#include <benchmark/benchmark.h>

#include "nmx/nmext.hpp"
#include "nmx/pa_protocol.hpp"
#include "nmx/presets.hpp"
#include "nmx/rng.hpp"
#include "nmx/t_tamper.hpp"
#include "nmx/two_source.hpp"

using namespace nmx;

static void NmExtMicro(benchmark::State& state) {
    ParamPlan plan = micro_preset("seeded-s1");
    NmExt pipe(plan);
    CtrRng rng(5);
    BitString x = rng.bits(plan.n), y = rng.bits(plan.d);
    for (auto _ : state) benchmark::DoNotOptimize(pipe.compute(x, y));
}
BENCHMARK(NmExtMicro);

static void NmExtProtocolScale(benchmark::State& state) {
    ParamPlan plan = micro_preset("pa-m8");
    NmExt pipe(plan);
    CtrRng rng(6);
    BitString x = rng.bits(plan.n), y = rng.bits(plan.d);
    for (auto _ : state) benchmark::DoNotOptimize(pipe.compute(x, y));
}
BENCHMARK(NmExtProtocolScale);

static void TwoNmExtMicro(benchmark::State& state) {
    ParamPlan plan = micro_preset("2src-t1");
    TwoNmExt pipe(plan);
    CtrRng rng(7);
    BitString x = rng.bits(plan.n), y = rng.bits(plan.n);
    for (auto _ : state) benchmark::DoNotOptimize(pipe.compute(x, y));
}
BENCHMARK(TwoNmExtMicro);

static void TNmExtMicro(benchmark::State& state) {
    ParamPlan plan = micro_preset("t-seeded-u1");
    TNmExt pipe(plan);
    CtrRng rng(8);
    BitString x = rng.bits(plan.n), y = rng.bits(plan.d);
    for (auto _ : state) benchmark::DoNotOptimize(pipe.compute(x, y));
}
BENCHMARK(TNmExtMicro);

static void PaSessionRun(benchmark::State& state) {
    ParamPlan plan = micro_preset("pa-m8");
    PaSession session(plan);
    AdversaryStrategy strat = make_strategy("substitute-B");
    CtrRng rng(9);
    BitString x = rng.bits(plan.n);
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(session.run(x, strat, seed++));
}
BENCHMARK(PaSessionRun);
