#include <benchmark/benchmark.h>

#include "tcub/census.hpp"
#include "tcub/elliptic.hpp"
#include "tcub/sampling.hpp"

using namespace tcub;

static void BM_FieldMul(benchmark::State& state) {
    FieldPtr f = Field::make(uint64_t(state.range(0)));
    Sampler rng(1);
    Fq a = rng.fq_nonzero(*f), b = rng.fq_nonzero(*f);
    for (auto _ : state) {
        a = a * b + b;
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FieldMul)->Arg(13)->Arg(101);

static void BM_ActOnLine(benchmark::State& state) {
    FieldPtr f = Field::make(13);
    Sampler rng(2);
    Line l = rng.line(*f);
    GL2 g = rng.gl2(*f);
    Mat<6> m = g5_tilde(g);
    for (auto _ : state) {
        auto img = m * l.z();
        benchmark::DoNotOptimize(img);
    }
}
BENCHMARK(BM_ActOnLine);

static void BM_BruteDecompose(benchmark::State& state) {
    FieldPtr f = Field::make(uint64_t(state.range(0)));
    Sampler rng(3);
    Line l = rng.generic_line(*f);
    for (auto _ : state) {
        auto p = brute_decompose(l);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_BruteDecompose)->Arg(7)->Arg(13);

static void BM_DecomposeGeneric(benchmark::State& state) {
    FieldPtr f = Field::make(uint64_t(state.range(0)));
    Sampler rng(4);
    Line l = rng.generic_line(*f);
    for (auto _ : state) {
        auto p = decompose_generic(l);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_DecomposeGeneric)->Arg(7)->Arg(13);

static void BM_CountPoints(benchmark::State& state) {
    FieldPtr f = Field::make(uint64_t(state.range(0)));
    Sampler rng(5);
    Line l = rng.generic_line(*f);
    EllipticCoeffs c = curve_coeffs(l);
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_points(c.g2, c.g3));
    }
}
BENCHMARK(BM_CountPoints)->Arg(13)->Arg(101);

static void BM_LineCensus(benchmark::State& state) {
    FieldPtr f = Field::make(uint64_t(state.range(0)));
    for (auto _ : state) {
        OrbitCensus c = line_census(f, unsigned(state.range(1)));
        benchmark::DoNotOptimize(c.orbits.size());
    }
}
BENCHMARK(BM_LineCensus)->Args({7, 1})->Args({13, 1})->Args({13, 8})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
