#include "test_support.hpp"

#include <benchmark/benchmark.h>

using namespace brauer2;
using namespace brauer2::testing;

namespace {

const RationalFunction t = RationalFunction::t();

void BM_FactorCyclotomic(benchmark::State& state)
{
    const QPoly p = pow(QPoly::variable(), static_cast<unsigned>(state.range(0))) - QPoly(Rational(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(factor_over_rationals(p));
}
BENCHMARK(BM_FactorCyclotomic)->Arg(12)->Arg(24)->Arg(36);

void BM_LocalSplitting(benchmark::State& state)
{
    const KPoly f = pow(x_poly(), 4) - k_const(t);
    const PlaceK v = PlaceK::at(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(local_splitting(f, v, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LocalSplitting)->Arg(8)->Arg(32)->Arg(128);

void BM_EnumerateSplitQuartic(benchmark::State& state)
{
    const EtaleAlgebra L(split_quartic());
    const BadPlaceSet S = compute_bad_places(L.f());
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_unramified_kernel(L, S));
}
BENCHMARK(BM_EnumerateSplitQuartic)->Unit(benchmark::kMillisecond);

void BM_FilterThreads(benchmark::State& state)
{
    const EtaleAlgebra L(split_quartic());
    const BadPlaceSet S = compute_bad_places(L.f());
    std::vector<EtaleElement> candidates;
    for (const auto& k : enumerate_unramified_kernel(L, S))
        candidates.push_back(k.representative());
    candidates.push_back(EtaleElement::split({t - RationalFunction(2), t - RationalFunction(2),
                                              RationalFunction(1), RationalFunction(1)}));
    for (auto _ : state)
        benchmark::DoNotOptimize(br_X_filter(candidates, L, S, Mode::geometric,
                                             static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_FilterThreads)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
