/**
 * @file bench_main.cpp
 * @brief Microbenchmarks for the basis pipeline and its kernels.
 */
#include <benchmark/benchmark.h>

#include "rr/rrspace.hpp"

namespace {

using namespace rr;

Curve conic_curve(std::uint64_t p) {
    Field F(p);
    BiPoly q = bp::normalize(
        F, {BiTerm{2, 0, 1}, BiTerm{0, 2, 1}, BiTerm{0, 0, F.from_int(-1)}});
    return make_curve(F, q, NodalDivisor{});
}

// Degree-10 curve with one node at the origin.
Curve decic_curve(std::uint64_t p) {
    Field F(p);
    BiPoly q = bp::normalize(
        F, {BiTerm{2, 0, 1}, BiTerm{0, 2, F.from_int(-1)},
            BiTerm{0, 4, 1}, BiTerm{3, 0, F.from_int(-1)},
            BiTerm{10, 0, 1}, BiTerm{0, 10, F.from_int(-5)},
            BiTerm{3, 7, 3}});
    Rng rng(7);
    RandomConfig cfg;
    NodalDivisor nodes = nodal_precompute(F, q, rng, cfg);
    return make_curve(F, q, nodes);
}

void BM_basis_conic(benchmark::State& state) {
    static const Curve C = conic_curve(65521);
    const int degree = static_cast<int>(state.range(0));
    std::uint64_t seed = 1000;
    RandomConfig cfg;
    for (auto _ : state) {
        state.PauseTiming();
        Rng rng(seed++);
        SmoothDivisor D = random_smooth_divisor(C, degree, rng, cfg);
        state.ResumeTiming();
        RRBasis rb = riemann_roch_basis(C, D, zero_divisor(), rng, cfg);
        benchmark::DoNotOptimize(rb.numerators.size());
    }
}
BENCHMARK(BM_basis_conic)->Arg(8)->Arg(16)->Arg(32)->Unit(
    benchmark::kMillisecond);

void BM_basis_decic(benchmark::State& state) {
    static const Curve C = decic_curve(65521);
    const int degree = static_cast<int>(state.range(0));
    std::uint64_t seed = 2000;
    RandomConfig cfg;
    for (auto _ : state) {
        state.PauseTiming();
        Rng rng(seed++);
        SmoothDivisor D = random_smooth_divisor(C, degree, rng, cfg);
        state.ResumeTiming();
        RRBasis rb = riemann_roch_basis(C, D, zero_divisor(), rng, cfg);
        benchmark::DoNotOptimize(rb.numerators.size());
    }
}
BENCHMARK(BM_basis_decic)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_add_divisors(benchmark::State& state) {
    static const Curve C = conic_curve(65521);
    Rng rng(42);
    RandomConfig cfg;
    SmoothDivisor D1 = random_smooth_divisor(C, 16, rng, cfg);
    SmoothDivisor D2 = random_smooth_divisor(C, 16, rng, cfg);
    for (auto _ : state) {
        SmoothDivisor s = add_divisors(C, D1, D2, rng, cfg);
        benchmark::DoNotOptimize(s.chi.c.data());
    }
}
BENCHMARK(BM_add_divisors)->Unit(benchmark::kMicrosecond);

void BM_resultant_decic(benchmark::State& state) {
    static const Curve C = decic_curve(65521);
    Rng rng(42);
    RandomConfig cfg;
    SmoothDivisor D = random_smooth_divisor(C, 30, rng, cfg);
    InterpolationResult interp = interpolate(C, D, rng, cfg);
    BiPoly A = bp::shear(C.F, C.q, 3);
    BiPoly B = bp::shear(C.F, interp.h, 3);
    for (auto _ : state) {
        UPoly res = bp::resultant_y(C.F, A, B,
                                    bp::SmallFieldPolicy::exact_fallback);
        benchmark::DoNotOptimize(res.c.data());
    }
}
BENCHMARK(BM_resultant_decic)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
