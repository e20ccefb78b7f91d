#include <benchmark/benchmark.h>

#include "curvecx/ball.hpp"
#include "curvecx/curves.hpp"
#include "curvecx/resolution.hpp"

using namespace ccx;

static void BM_IntersectionProfile(benchmark::State& state) {
    RibbonSurface s = build_surface(0, 5);
    CurveClass a = canon_curve(s, parse_word("abcdBC", 4));
    CurveClass b = canon_curve(s, parse_word("bcd", 4));
    for (auto _ : state) benchmark::DoNotOptimize(intersection_profile(s, a, b));
}
BENCHMARK(BM_IntersectionProfile);

static void BM_SelfIntersection(benchmark::State& state) {
    RibbonSurface s = build_surface(1, 2);
    Word w = parse_word("abAcBc", 3);
    for (auto _ : state) benchmark::DoNotOptimize(self_intersection_count(s, w));
}
BENCHMARK(BM_SelfIntersection);

static void BM_EnumerateCurves(benchmark::State& state) {
    RibbonSurface s = build_surface(1, 2);
    int len = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_curves(s, len));
}
BENCHMARK(BM_EnumerateCurves)->Arg(3)->Arg(4)->Arg(5);

static void BM_BuildBall(benchmark::State& state) {
    RibbonSurface s = build_surface(0, 5);
    for (auto _ : state) benchmark::DoNotOptimize(build_ball(s, 4, 1));
}
BENCHMARK(BM_BuildBall);

static void BM_ResolveCurves(benchmark::State& state) {
    RibbonSurface s = build_surface(0, 4);
    CurveClass a = canon_curve(s, parse_word("ab", 3));
    CurveClass b = canon_curve(s, parse_word("bc", 3));
    for (auto _ : state) benchmark::DoNotOptimize(resolve_curves(s, a, b));
}
BENCHMARK(BM_ResolveCurves);

static void BM_MaxSimplex(benchmark::State& state) {
    ComplexBall ball = build_ball(build_surface(0, 5), 4, 1);
    for (auto _ : state) benchmark::DoNotOptimize(max_simplex(ball));
}
BENCHMARK(BM_MaxSimplex);

BENCHMARK_MAIN();
