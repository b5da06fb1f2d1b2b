#include <benchmark/benchmark.h>

#include "qgk/corpus.hpp"
#include "qgk/specfun.hpp"

namespace sf = qgk::specfun;

namespace {

void BM_ln_gamma(benchmark::State& state)
{
    double x = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sf::ln_gamma(x));
        x = x < 50.0 ? x + 0.37 : 0.5;
    }
}
BENCHMARK(BM_ln_gamma);

void BM_polygamma(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sf::polygamma(n, 3.7));
    }
}
BENCHMARK(BM_polygamma)->Arg(1)->Arg(4)->Arg(12);

void BM_polygamma_series(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sf::polygamma_series(n, 3.7));
    }
}
BENCHMARK(BM_polygamma_series)->Arg(1)->Arg(4);

// q near 1 is the slow end of the product expansion
void BM_ln_q_gamma(benchmark::State& state)
{
    const qgk::QParam q(state.range(0) / 10000.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sf::ln_q_gamma(2.3, q));
    }
}
BENCHMARK(BM_ln_q_gamma)->Arg(5000)->Arg(9900)->Arg(9999);

void BM_q_polygamma(benchmark::State& state)
{
    const qgk::QParam q(0.9);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sf::q_polygamma(2, 2.3, q));
    }
}
BENCHMARK(BM_q_polygamma);

void BM_kernel_derivative(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sf::kernel_derivative(n, n, 0.5));
    }
}
BENCHMARK(BM_kernel_derivative)->Arg(4)->Arg(16);

void BM_corpus_entry(benchmark::State& state)
{
    const auto inst = qgk::corpus::instantiate("thm8-lcm");
    for (auto _ : state) {
        benchmark::DoNotOptimize(qgk::corpus::run(inst));
    }
}
BENCHMARK(BM_corpus_entry)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
