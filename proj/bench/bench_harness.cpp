#include "orbit/harness.hpp"

#include <benchmark/benchmark.h>

using namespace orbit;

static void BM_ClassifyAdjoint(benchmark::State& state)
{
    AdjointTriple t = synthesize_adjoint(AdjointOrbitLabel::parse("u{D+_2(0), mu2=9/4} + D-_0(IP b=1/4) + D+_0(0)"));
    t = conjugate(t, random_stabilizer_element(1, t.gram, t.v0));
    for (auto _ : state) benchmark::DoNotOptimize(classify_adjoint(t));
}
BENCHMARK(BM_ClassifyAdjoint)->Unit(benchmark::kMicrosecond);

static void BM_ClassifyCotuple(benchmark::State& state)
{
    CoTuple t = synthesize_cotype(CoadjointOrbitLabel::parse("N-_5(0), mu2=9/4 + D-_0(0)"));
    t = apply_cotuple_equivalence(t, random_group_element(1, t.gram), Vec(t.gram.rows(), ExactScalar(1)));
    for (auto _ : state) benchmark::DoNotOptimize(classify_cotuple(t));
}
BENCHMARK(BM_ClassifyCotuple)->Unit(benchmark::kMicrosecond);

static void BM_SynthesizeAdjoint(benchmark::State& state)
{
    AdjointOrbitLabel l = AdjointOrbitLabel::parse("u{D+_0(0)+D-_0(0)} + D-_0(IP b=2) + D_0(RP a=1/4)");
    for (auto _ : state) benchmark::DoNotOptimize(synthesize_adjoint(l));
}
BENCHMARK(BM_SynthesizeAdjoint)->Unit(benchmark::kMicrosecond);

// range(0): trials per instance; range(1): 0 serial, 1 OpenMP
static void BM_AdjointSuite(benchmark::State& state)
{
    SuiteOptions opt{7, static_cast<int>(state.range(0)), state.range(1) != 0};
    for (auto _ : state) benchmark::DoNotOptimize(adjoint_invariance_suite(opt).failures);
    state.SetItemsProcessed(state.iterations() * 60 * state.range(0));
}
BENCHMARK(BM_AdjointSuite)->Args({5, 0})->Args({5, 1})->Unit(benchmark::kMillisecond);

static void BM_CoadjointSuite(benchmark::State& state)
{
    SuiteOptions opt{7, static_cast<int>(state.range(0)), state.range(1) != 0};
    for (auto _ : state) benchmark::DoNotOptimize(coadjoint_invariance_suite(opt).failures);
    state.SetItemsProcessed(state.iterations() * 60 * state.range(0));
}
BENCHMARK(BM_CoadjointSuite)->Args({5, 0})->Args({5, 1})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
