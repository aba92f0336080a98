// Microbenchmarks for the exact-series kernels; the nested T-sums dominate
// the identity suites, so their scaling with the order is what matters.

#include <benchmark/benchmark.h>

#include "qzeta/fock.hpp"
#include "qzeta/hilbert.hpp"
#include "qzeta/qzv.hpp"

using namespace qzeta;

namespace {

PowerSeries dense_series(std::size_t order) {
    PowerSeries s(order);
    for (std::size_t k = 0; k <= order; ++k)
        s.set_coeff(k, rat(static_cast<long>(3 * k + 1), static_cast<long>(k % 7 + 1)));
    return s;
}

void bm_mul(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    PowerSeries a = dense_series(n), b = dense_series(n);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bm_mul)->Arg(16)->Arg(64)->Arg(128);

void bm_inverse(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    PowerSeries a = dense_series(n);
    for (auto _ : state) benchmark::DoNotOptimize(inverse(a));
}
BENCHMARK(bm_inverse)->Arg(64)->Arg(128);

void bm_goettsche(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(goettsche_series(24, 60));
}
BENCHMARK(bm_goettsche);

void bm_okounkov_z22(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(okounkov_z({2, 2}, n));
}
BENCHMARK(bm_okounkov_z22)->Arg(20)->Arg(40);

void bm_t111(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sum_family(SumFamily::T_111, n));
}
BENCHMARK(bm_t111)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void bm_t22(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sum_family(SumFamily::T_22, n));
}
BENCHMARK(bm_t22)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void bm_vertex_trace(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    FrobeniusRing p2 = projective_plane_model();
    for (auto _ : state) {
        VertexTraceContext ctx(p2, depth);
        benchmark::DoNotOptimize(ctx.trace_q_w());
    }
}
BENCHMARK(bm_vertex_trace)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void bm_g2_trace(benchmark::State& state) {
    const int depth = static_cast<int>(state.range(0));
    FrobeniusRing p2 = projective_plane_model();
    VertexTraceContext ctx(p2, depth);
    for (auto _ : state) {
        FockOperator g2 = g2_operator(ctx.space(), p2.unit());
        benchmark::DoNotOptimize(ctx.trace_q_w(g2));
    }
}
BENCHMARK(bm_g2_trace)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
