// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "derivspace/genericity.hpp"
#include "derivspace/reference.hpp"

using namespace derivspace;

namespace {

ExactMatrix random_matrix(std::size_t rows, std::size_t cols)
{
    std::mt19937_64 rng(rows * 131 + cols);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    ExactMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
    }
    return m;
}

void BM_RrefParallel(benchmark::State& state)
{
    const auto size = static_cast<std::size_t>(state.range(0));
    const ExactMatrix m = random_matrix(size, size + 5);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}

void BM_RrefSerial(benchmark::State& state)
{
    const auto size = static_cast<std::size_t>(state.range(0));
    const ExactMatrix m = random_matrix(size, size + 5);
    for (auto _ : state) benchmark::DoNotOptimize(reference::rref(m));
}

void BM_CatalecticantParallel(benchmark::State& state)
{
    const HomPoly f = sample(3, 8, 1000, 1);
    for (auto _ : state) benchmark::DoNotOptimize(catalecticant(f, static_cast<int>(state.range(0))));
}

void BM_CatalecticantSerial(benchmark::State& state)
{
    const HomPoly f = sample(3, 8, 1000, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::catalecticant(f, static_cast<int>(state.range(0))));
    }
}

void BM_TheoremExperiment(benchmark::State& state)
{
    ExperimentConfig c;
    c.kind = ExperimentKind::Theorem;
    c.n = 2;
    c.d = 6;
    c.k = 2;
    c.trials = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_experiment(c));
}

} // namespace

BENCHMARK(BM_RrefParallel)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RrefSerial)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CatalecticantParallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CatalecticantSerial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TheoremExperiment)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
