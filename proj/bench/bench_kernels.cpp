// Serial reference against the OpenMP kernels. With one hardware thread the
// two should match; the gap appears with OMP_NUM_THREADS > 1.

#include <benchmark/benchmark.h>

#include <random>

#include "ratdyn/eulerian.hpp"
#include "ratdyn/fixedpoints.hpp"

using namespace ratdyn;

namespace {

std::vector<Rational> random_rationals(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-999, 999), den(1, 99);
    std::vector<Rational> out;
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(num(rng), den(rng));
    return out;
}

void BM_convolve_serial(benchmark::State& state)
{
    const auto a = random_rationals(static_cast<std::size_t>(state.range(0)), 1);
    const auto b = random_rationals(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::convolve(a, b));
}

void BM_convolve_parallel(benchmark::State& state)
{
    const auto a = random_rationals(static_cast<std::size_t>(state.range(0)), 1);
    const auto b = random_rationals(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::parallel::convolve(a, b));
}

template <kernels::Execution Exec>
void BM_convergence_report(benchmark::State& state)
{
    const auto spec = ClassSpec::make({3, 5, 7});
    for (auto _ : state) benchmark::DoNotOptimize(convergence_report(spec, 4, 0, 14, state.range(0), Exec));
}

template <kernels::Execution Exec>
void BM_enumerate_basis(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_basis(state.range(0), Exec));
}

} // namespace

BENCHMARK(BM_convolve_serial)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_convolve_parallel)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_convergence_report<kernels::Execution::Serial>)->Arg(20)->Arg(80);
BENCHMARK(BM_convergence_report<kernels::Execution::Parallel>)->Arg(20)->Arg(80);
BENCHMARK(BM_enumerate_basis<kernels::Execution::Serial>)->Arg(15)->Arg(21);
BENCHMARK(BM_enumerate_basis<kernels::Execution::Parallel>)->Arg(15)->Arg(21);

BENCHMARK_MAIN();
