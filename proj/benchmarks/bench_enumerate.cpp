#include <benchmark/benchmark.h>

#include <cmath>

#include "qrep/ffrep.hpp"

using namespace qrep;

namespace {

Quiver two_loop() { return Quiver(1, {{0, 0}, {0, 0}}); }
Quiver jordan() { return Quiver(1, {{0, 0}}); }

void BM_classify_two_loop_dim2(benchmark::State& state) {
    uint32_t p = static_cast<uint32_t>(state.range(0));
    for (auto _ : state) {
        ClassifyCounts c = enumerate_and_classify(two_loop(), {2}, p);
        benchmark::DoNotOptimize(c);
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(std::pow(p, 8)));
}
BENCHMARK(BM_classify_two_loop_dim2)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_classify_two_loop_dim3_f2(benchmark::State& state) {
    for (auto _ : state) {
        ClassifyCounts c = enumerate_and_classify(two_loop(), {3}, 2);
        benchmark::DoNotOptimize(c);
    }
    state.SetItemsProcessed(state.iterations() * (int64_t(1) << 18));
}
BENCHMARK(BM_classify_two_loop_dim3_f2)->Unit(benchmark::kMillisecond);

void BM_classify_jordan_dim3(benchmark::State& state) {
    uint32_t p = static_cast<uint32_t>(state.range(0));
    for (auto _ : state) {
        ClassifyCounts c = enumerate_and_classify(jordan(), {3}, p);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_classify_jordan_dim3)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_subrep_enumeration(benchmark::State& state) {
    FFRep rep(two_loop(), 2, {2});
    rep.matrix(0).at(0, 1) = 1;
    for (auto _ : state) {
        auto subs = enumerate_subreps(rep);
        benchmark::DoNotOptimize(subs);
    }
}
BENCHMARK(BM_subrep_enumeration);

} // namespace
