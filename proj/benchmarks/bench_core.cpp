#include <benchmark/benchmark.h>

#include <cmath>

#include "ramanujan/asymptotics.hpp"
#include "ramanujan/integral.hpp"
#include "ramanujan/quadrature.hpp"
#include "ramanujan/turan.hpp"

namespace {

using namespace ramanujan;

void BM_IntegrateFinite(benchmark::State& state) {
    quad::Integrand f([](double x) { return 1.0 / (1.0 + x * x); });
    for (auto _ : state) {
        auto r = quad::integrate_finite(f, 0.0, 10.0);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_IntegrateFinite);

void BM_TanhSinh(benchmark::State& state) {
    quad::Integrand f([](double x) { return std::log(x) * std::log(1.0 - x); },
                      {quad::Endpoint::lower, quad::Endpoint::upper});
    for (auto _ : state) {
        auto r = quad::integrate_tanh_sinh(f, 0.0, 1.0);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_TanhSinh);

void BM_EvalDerivative(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto ev = eval_derivative(n, 1.0);
        benchmark::DoNotOptimize(ev.value);
    }
}
BENCHMARK(BM_EvalDerivative)->Arg(0)->Arg(2)->Arg(8);

void BM_Certificate(benchmark::State& state) {
    for (auto _ : state) {
        auto r = bernstein_certificate();
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_Certificate);

void BM_HDensity(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = turan::h_density(n, 2.0);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_HDensity)->Arg(2)->Arg(4)->Arg(6);

void BM_TuranH(benchmark::State& state) {
    for (auto _ : state) {
        auto h = turan::turan_H({3, 0.5}, 1.0);
        benchmark::DoNotOptimize(h.value);
    }
}
BENCHMARK(BM_TuranH);

void BM_PhiCoefficients(benchmark::State& state) {
    for (auto _ : state) {
        auto c = asym::phi_coefficients(asym::default_a, 3, 30);
        benchmark::DoNotOptimize(c.coeffs.data());
    }
}
BENCHMARK(BM_PhiCoefficients);

}  // namespace

BENCHMARK_MAIN();
