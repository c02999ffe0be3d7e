// Serial reference vs OpenMP kernels on the shapes the attack loop hits:
// a 512-row MNIST batch against LR (784 -> 1) and the DNN's first layer
// (2048 -> 128).

#include <benchmark/benchmark.h>

#include <array>
#include <vector>

#include "poisonforge/kernels.hpp"
#include "poisonforge/rng.hpp"

using namespace poisonforge;

namespace {

std::vector<double> filled(std::size_t n, std::uint64_t seed) {
    RngStream rng(seed);
    std::vector<double> v(n);
    for (double& x : v) x = rng.uniform(-1.0, 1.0);
    return v;
}

// args: n, k, m, threads (0 = serial reference)
template <auto Parallel, auto Reference>
void run(benchmark::State& state, std::size_t n, std::size_t k, std::size_t m, std::size_t a_size,
         std::size_t b_size, std::size_t c_size) {
    const auto a = filled(a_size, 1), b = filled(b_size, 2);
    std::vector<double> c(c_size);
    const int threads = static_cast<int>(state.range(3));
    if (threads > 0) kernels::set_threads(threads);
    for (auto _ : state) {
        if (threads > 0)
            Parallel(a, b, c, n, k, m);
        else
            Reference(a, b, c, n, k, m);
        benchmark::DoNotOptimize(c.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * n * k * m));
}

void BM_gemm_nt(benchmark::State& state) {
    const auto n = state.range(0), k = state.range(1), m = state.range(2);
    run<kernels::gemm_nt, kernels::reference::gemm_nt>(state, n, k, m, n * k, m * k, n * m);
}

void BM_gemm_tn(benchmark::State& state) {
    const auto n = state.range(0), k = state.range(1), m = state.range(2);
    run<kernels::gemm_tn, kernels::reference::gemm_tn>(state, n, k, m, n * k, n * m, k * m);
}

void BM_gemm_nn(benchmark::State& state) {
    const auto n = state.range(0), k = state.range(1), m = state.range(2);
    run<kernels::gemm_nn, kernels::reference::gemm_nn>(state, n, k, m, n * k, k * m, n * m);
}

void shapes(benchmark::internal::Benchmark* b) {
    b->ArgNames({"n", "k", "m", "threads"})->UseRealTime();
    for (int threads : {0, 1, 2, 4})
        for (auto [n, k, m] : {std::array<int, 3>{512, 784, 1}, {512, 2048, 128}, {512, 128, 32}})
            b->Args({n, k, m, threads});
}

}  // namespace

BENCHMARK(BM_gemm_nt)->Apply(shapes);
BENCHMARK(BM_gemm_tn)->Apply(shapes);
BENCHMARK(BM_gemm_nn)->Apply(shapes);

BENCHMARK_MAIN();
