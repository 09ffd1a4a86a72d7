#include "chebfam/analysis.hpp"
#include "chebfam/polyfamily.hpp"

#include <benchmark/benchmark.h>

namespace {

using chebfam::FamilyId;

void BM_TriangleRowsCold(benchmark::State& state) {
    const long maxN = state.range(0);
    for (auto _ : state) {
        chebfam::CoeffTriangle t(FamilyId{3, 3});
        for (long n = 3; n <= maxN; ++n) benchmark::DoNotOptimize(t.row(n));
    }
}
BENCHMARK(BM_TriangleRowsCold)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_BuildRoute(benchmark::State& state) {
    const long n = state.range(0);
    const FamilyId f{4, 2};
    for (auto _ : state) {
        switch (state.range(1)) {
            case 0: benchmark::DoNotOptimize(chebfam::buildByReduction(n, f)); break;
            case 1: benchmark::DoNotOptimize(chebfam::buildByThreeTerm(n, f)); break;
            default: benchmark::DoNotOptimize(chebfam::buildViaTRecurrence(n, f, 2)); break;
        }
    }
}
BENCHMARK(BM_BuildRoute)->ArgsProduct({{16, 32}, {0, 1, 2}});

void BM_NumericZeros(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(chebfam::numericZeros(n, chebfam::kPrincipalFamily));
}
BENCHMARK(BM_NumericZeros)->Arg(8)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_CompensatedEval(benchmark::State& state) {
    const auto& p = chebfam::buildDefinitional(state.range(0), chebfam::kPrincipalFamily);
    double x = -1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(chebfam::evaluate(p, x));
        x = x > 1.0 ? -1.0 : x + 1e-3;
    }
}
BENCHMARK(BM_CompensatedEval)->Arg(10)->Arg(25);

}  // namespace
