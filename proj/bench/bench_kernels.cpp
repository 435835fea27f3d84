// OpenMP kernels against their serial twins.

#include <benchmark/benchmark.h>

#include <random>

#include "gsw/fastapprox.hpp"
#include "gsw/kernels.hpp"
#include "gsw/montecarlo.hpp"

namespace {

using namespace gsw;

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::normal_distribution<double> dist;
    Matrix m(rows, cols);
    for (double& v : m.values()) v = dist(eng);
    return m;
}

void BM_Matmul(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix a = random_matrix(n, n, 1);
    const Matrix b = random_matrix(n, n, 2);
    Matrix c(n, n);
    for (auto _ : state) {
        kernels::matmul(a, b, c);
        benchmark::DoNotOptimize(c.values().data());
    }
    state.SetItemsProcessed(state.iterations() * n * n * n);
}

void BM_MatmulSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Matrix a = random_matrix(n, n, 1);
    const Matrix b = random_matrix(n, n, 2);
    Matrix c(n, n);
    for (auto _ : state) {
        kernels::serial::matmul(a, b, c);
        benchmark::DoNotOptimize(c.values().data());
    }
    state.SetItemsProcessed(state.iterations() * n * n * n);
}

void BM_PairStats(benchmark::State& state) {
    const Matrix x = random_matrix(static_cast<std::size_t>(state.range(0)), 256, 3);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::pair_inner_stats(x));
}

void BM_PairStatsSerial(benchmark::State& state) {
    const Matrix x = random_matrix(static_cast<std::size_t>(state.range(0)), 256, 3);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::pair_inner_stats(x));
}

void BM_MonomialMoments(benchmark::State& state) {
    const SampleSet s(random_matrix(2000, static_cast<std::size_t>(state.range(0)), 4));
    const MultiIndexSet idx = enumerate_multi_indices(s.dim(), 3);
    for (auto _ : state) benchmark::DoNotOptimize(monomial_moments(s, idx));
}

void BM_MonomialMomentsSerial(benchmark::State& state) {
    const SampleSet s(random_matrix(2000, static_cast<std::size_t>(state.range(0)), 4));
    const MultiIndexSet idx = enumerate_multi_indices(s.dim(), 3);
    for (auto _ : state) benchmark::DoNotOptimize(serial::monomial_moments(s, idx));
}

void mc_case(benchmark::State& state, bool parallel) {
    const SampleSet mu(random_matrix(2000, static_cast<std::size_t>(state.range(0)), 5));
    const SampleSet nu(random_matrix(2000, static_cast<std::size_t>(state.range(0)), 6));
    McConfig cfg;
    cfg.n_projections = 500;
    cfg.rng = root_stream(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(parallel ? mc_gsw(mu, nu, DefiningFunctionSpec::linear(), cfg)
                                          : reference::mc_gsw(mu, nu, DefiningFunctionSpec::linear(), cfg));
    }
}

void BM_McGsw(benchmark::State& state) { mc_case(state, true); }
void BM_McGswReference(benchmark::State& state) { mc_case(state, false); }

}  // namespace

BENCHMARK(BM_Matmul)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatmulSerial)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairStats)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairStatsSerial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonomialMoments)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonomialMomentsSerial)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_McGsw)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_McGswReference)->Arg(16)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
