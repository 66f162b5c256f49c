// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "lng/kernels.hpp"

using namespace lng;

namespace {

const Lattice L = Lattice::numeric(1.0, cplx(0.31, 1.13));
const ExactScalar W1(QuadElem(-1, Q(0), Q(1)));
const ExactScalar W2(QuadElem(-1, Q(5, 7), Q(3, 11)));  // no witness with entries <= 10

void BM_eisenstein_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(eisenstein_sum_serial(L, cplx(0.17, -0.41), int(st.range(0))));
}

void BM_eisenstein_parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(eisenstein_sum(L, cplx(0.17, -0.41), int(st.range(0))));
    st.counters["threads"] = kernel_threads();
}

void BM_brute_force_serial(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(brute_force_commensurable_serial(W1, W2, int(st.range(0))));
}

void BM_brute_force_parallel(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(brute_force_commensurable(W1, W2, int(st.range(0))));
    st.counters["threads"] = kernel_threads();
}

}  // namespace

BENCHMARK(BM_eisenstein_serial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_eisenstein_parallel)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_brute_force_serial)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_brute_force_parallel)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
