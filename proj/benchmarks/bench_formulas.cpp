#include <benchmark/benchmark.h>

#include "qrep/count_formulas.hpp"
#include "qrep/torus_series.hpp"

using namespace qrep;

namespace {

Quiver two_loop() { return Quiver(1, {{0, 0}, {0, 0}}); }
Quiver jordan() { return Quiver(1, {{0, 0}}); }
Quiver a2() { return Quiver(2, {{0, 1}}); }

void BM_n_poly_two_loop(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        LaurentPoly n = n_poly(two_loop(), {k});
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_n_poly_two_loop)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_n_poly_extended_a2(benchmark::State& state) {
    Quiver ext = a2().extend();
    for (auto _ : state) {
        LaurentPoly n = n_poly(ext, {2, 1, 1});
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_n_poly_extended_a2)->Unit(benchmark::kMillisecond);

void BM_verify_jordan(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        FactorizationReport r = verify_factorizations(jordan(), d);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_verify_jordan)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_verify_extended_a2(benchmark::State& state) {
    for (auto _ : state) {
        FactorizationReport r = verify_factorizations(a2(), 4);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_verify_extended_a2)->Unit(benchmark::kMillisecond);

void BM_torus_inverse(benchmark::State& state) {
    TorusSeries s = series_from_counts(two_loop(), CountKind::all, 4);
    for (auto _ : state) {
        TorusSeries inv = s.inverse();
        benchmark::DoNotOptimize(inv);
    }
}
BENCHMARK(BM_torus_inverse)->Unit(benchmark::kMillisecond);

} // namespace
