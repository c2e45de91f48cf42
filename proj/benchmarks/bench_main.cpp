#include "qtri/qtri.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace qtri;

namespace {

void BM_TriangularBasisRankTwo(benchmark::State& state) {
    const IntMatrix B = IntMatrix::from_rows({{0, -3}, {3, 0}});
    const Seed s = principal_seed(B);
    const auto q = bipartite_parts(B);
    for (auto _ : state) benchmark::DoNotOptimize(triangular_basis(s, q, {9, -4, 0, 0}));
}
BENCHMARK(BM_TriangularBasisRankTwo)->Unit(benchmark::kMillisecond);

void BM_TriangularBasisRankThree(benchmark::State& state) {
    const IntMatrix B = IntMatrix::from_rows({{0, 0, -2}, {0, 0, -2}, {2, 2, 0}});
    const Seed s = principal_seed(B);
    const auto q = bipartite_parts(B);
    for (auto _ : state) benchmark::DoNotOptimize(triangular_basis(s, q, {4, 3, -3, 0, 0, 0}));
}
BENCHMARK(BM_TriangularBasisRankThree)->Unit(benchmark::kMillisecond);

void BM_TriangularBasisScaled(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const IntMatrix B = IntMatrix::from_rows({{0, -3}, {3, 0}});
    const Seed s = principal_seed(B);
    const auto q = bipartite_parts(B);
    for (auto _ : state) benchmark::DoNotOptimize(triangular_basis(s, q, {3 * m, -m, 0, 0}));
}
BENCHMARK(BM_TriangularBasisScaled)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_TorusMul(benchmark::State& state) {
    const Seed s = principal_seed(IntMatrix::from_rows({{0, 0, -2}, {0, 0, -2}, {2, 2, 0}}));
    const TorusElem x = x_prime(s, 0) * x_prime(s, 1) * x_prime(s, 2);
    const TorusElem y = torus_pow(x, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(y * x);
    state.counters["terms"] = static_cast<double>(y.num_terms());
}
BENCHMARK(BM_TorusMul)->DenseRange(1, 4);

void BM_QBinom(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(qbinom(n, n / 2));
}
BENCHMARK(BM_QBinom)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);

void BM_LaurentMul(benchmark::State& state) {
    const LaurentPoly a = qbinom(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)) / 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(BM_LaurentMul)->RangeMultiplier(2)->Range(4, 64)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
