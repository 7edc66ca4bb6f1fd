#include <benchmark/benchmark.h>

#include "nmx/gf2.hpp"
#include "nmx/reed_solomon.hpp"
#include "nmx/rng.hpp"

using namespace nmx;

static void GfMul(benchmark::State& state) {
    Gf2Field f(static_cast<unsigned>(state.range(0)));
    std::uint32_t a = 3, b = 5;
    const std::uint32_t mask = f.size() - 1;
    for (auto _ : state) {
        a = (a * 2654435761u + 1) & mask;
        b = (b * 2246822519u + 7) & mask;
        benchmark::DoNotOptimize(f.mul(a, b));
    }
}
BENCHMARK(GfMul)->Arg(4)->Arg(8)->Arg(12)->Arg(17)->Arg(24);

static void RsEncode(benchmark::State& state) {
    const unsigned w = 8;
    const std::size_t msg_len = static_cast<std::size_t>(state.range(0));
    CtrRng rng(1);
    FieldVec msg;
    for (std::size_t i = 0; i < msg_len; ++i)
        msg.push_back({static_cast<std::uint32_t>(rng.next() & 0xff), w});
    for (auto _ : state) benchmark::DoNotOptimize(rs_encode(msg, 2 * msg_len));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(RsEncode)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void InnerProduct(benchmark::State& state) {
    CtrRng rng(2);
    FieldVec x, y;
    for (int i = 0; i < 64; ++i) {
        x.push_back({static_cast<std::uint32_t>(rng.next() & 0xff), 8});
        y.push_back({static_cast<std::uint32_t>(rng.next() & 0xff), 8});
    }
    for (auto _ : state) benchmark::DoNotOptimize(ip(x, y));
}
BENCHMARK(InnerProduct);

BENCHMARK_MAIN();
