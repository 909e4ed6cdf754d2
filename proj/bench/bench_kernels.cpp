// Serial references against the OpenMP kernels.
#include "modfol/eisenstein.hpp"
#include "modfol/periods.hpp"
#include "modfol/qseries.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace modfol;

namespace {

QSeries sample_series(int order)
{
    return eisenstein_series(2, order).series;
}

void BM_series_mul_serial(benchmark::State& state)
{
    const QSeries a = sample_series(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::series_mul_serial(a, a));
    }
}

void BM_series_mul_parallel(benchmark::State& state)
{
    const QSeries a = sample_series(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(series_mul(a, a));
    }
}

void BM_eisenstein_serial(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::eisenstein_series_serial(3, static_cast<int>(state.range(0))));
    }
}

void BM_eisenstein_parallel(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(eisenstein_series(3, static_cast<int>(state.range(0))));
    }
}

std::vector<CurvePoint> sample_points(std::size_t n)
{
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> u(-3, 3);
    std::vector<CurvePoint> pts;
    while (pts.size() < n) {
        const CurvePoint t{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
        if (std::abs(t.discriminant()) > 0.1) {
            pts.push_back(t);
        }
    }
    return pts;
}

void BM_periods_serial(benchmark::State& state)
{
    const auto pts = sample_points(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::period_matrices_serial(pts));
    }
}

void BM_periods_parallel(benchmark::State& state)
{
    const auto pts = sample_points(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(period_matrices(pts));
    }
}

} // namespace

BENCHMARK(BM_series_mul_serial)->Arg(100)->Arg(400);
BENCHMARK(BM_series_mul_parallel)->Arg(100)->Arg(400);
BENCHMARK(BM_eisenstein_serial)->Arg(500)->Arg(2000);
BENCHMARK(BM_eisenstein_parallel)->Arg(500)->Arg(2000);
BENCHMARK(BM_periods_serial)->Arg(1000);
BENCHMARK(BM_periods_parallel)->Arg(1000);

BENCHMARK_MAIN();
