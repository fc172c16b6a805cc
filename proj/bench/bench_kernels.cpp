// Serial reference against OpenMP variant for each data-parallel kernel.

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "framecast/kernels.hpp"

namespace {

using namespace framecast;
using kernels::Op;

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n;
    ComplexMatrix m(rows, cols);
    for (auto& z : m.entries()) z = {n(rng), n(rng)};
    return m;
}

std::vector<Point2> random_points(std::size_t count, double radius, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-radius, radius);
    std::vector<Point2> out(count);
    for (auto& p : out) p = {u(rng), u(rng)};
    return out;
}

template <auto Gemm>
void gemm(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const ComplexMatrix a = random_matrix(n, n, 1);
    const ComplexMatrix b = random_matrix(n, n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(Gemm(a, Op::None, b, Op::Adjoint));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n * n));
}

// disk grid with N x N nodes against a handful of spiral frequencies, as in
// the reconstruction figures, and against many
template <auto Samples>
void exponential_samples(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto m = static_cast<std::size_t>(state.range(1));
    const auto nodes = random_points(n * n, 0.25, 3);
    const auto freqs = random_points(m, 2.0, 4);
    for (auto _ : state) benchmark::DoNotOptimize(Samples(nodes, freqs, {}));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n * m));
}

template <auto MaxMin>
void max_min_distance(benchmark::State& state)
{
    const auto g = static_cast<std::size_t>(state.range(0));
    const auto probes = random_points(g * g, 1.0, 5);
    const auto sites = random_points(static_cast<std::size_t>(state.range(1)), 1.0, 6);
    for (auto _ : state) benchmark::DoNotOptimize(MaxMin(probes, sites));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(probes.size() * sites.size()));
}

BENCHMARK(gemm<kernels::serial::gemm>)->Name("gemm/serial")->Arg(64)->Arg(256);
BENCHMARK(gemm<kernels::parallel::gemm>)->Name("gemm/parallel")->Arg(64)->Arg(256)->UseRealTime();

BENCHMARK(exponential_samples<kernels::serial::exponential_samples>)
    ->Name("exponential_samples/serial")
    ->Args({50, 3})
    ->Args({100, 64});
BENCHMARK(exponential_samples<kernels::parallel::exponential_samples>)
    ->Name("exponential_samples/parallel")
    ->Args({50, 3})
    ->Args({100, 64})
    ->UseRealTime();

BENCHMARK(max_min_distance<kernels::serial::max_min_distance>)
    ->Name("max_min_distance/serial")
    ->Args({200, 40})
    ->Args({400, 400});
BENCHMARK(max_min_distance<kernels::parallel::max_min_distance>)
    ->Name("max_min_distance/parallel")
    ->Args({200, 40})
    ->Args({400, 400})
    ->UseRealTime();

} // namespace

BENCHMARK_MAIN();
