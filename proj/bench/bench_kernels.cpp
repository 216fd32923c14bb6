#include <benchmark/benchmark.h>

#include <random>

#include "opuc/construction.hpp"
#include "opuc/fft.hpp"
#include "opuc/kernels.hpp"

namespace {

opuc::ComplexPolynomial random_polynomial(std::size_t degree) {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    std::vector<opuc::cplx> c(degree + 1);
    for (auto& v : c) v = {g(rng), g(rng)};
    return opuc::ComplexPolynomial(std::move(c));
}

void BM_EvaluateSerial(benchmark::State& state) {
    const auto p = random_polynomial(static_cast<std::size_t>(state.range(0)));
    const auto t = opuc::kernels::uniform_angles(8192);
    for (auto _ : state) benchmark::DoNotOptimize(opuc::kernels::evaluate_at_serial(p, t));
}

void BM_EvaluateParallel(benchmark::State& state) {
    const auto p = random_polynomial(static_cast<std::size_t>(state.range(0)));
    const auto t = opuc::kernels::uniform_angles(8192);
    for (auto _ : state) benchmark::DoNotOptimize(opuc::kernels::evaluate_at(p, t));
}

void BM_EvaluateFft(benchmark::State& state) {
    const auto p = random_polynomial(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(opuc::fft::evaluate_on_circle(p, 8192));
}

void BM_SumSerial(benchmark::State& state) {
    std::vector<double> v(static_cast<std::size_t>(state.range(0)), 1.5);
    for (auto _ : state) benchmark::DoNotOptimize(opuc::kernels::sum_serial(v));
}

void BM_SumParallel(benchmark::State& state) {
    std::vector<double> v(static_cast<std::size_t>(state.range(0)), 1.5);
    for (auto _ : state) benchmark::DoNotOptimize(opuc::kernels::sum(v));
}

void BM_Construction(benchmark::State& state) {
    opuc::ConstructionParams p;
    p.n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(opuc::build_construction(p));
}

}  // namespace

BENCHMARK(BM_EvaluateSerial)->Arg(128)->Arg(1024);
BENCHMARK(BM_EvaluateParallel)->Arg(128)->Arg(1024);
BENCHMARK(BM_EvaluateFft)->Arg(128)->Arg(1024);
BENCHMARK(BM_SumSerial)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_SumParallel)->Arg(1 << 16)->Arg(1 << 20);
BENCHMARK(BM_Construction)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
