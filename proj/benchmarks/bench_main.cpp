#include <benchmark/benchmark.h>

#include "ahlfors/closed_form.hpp"
#include "ahlfors/domain.hpp"
#include "ahlfors/solver.hpp"

using namespace ahlfors;

static void BM_DiskSolve(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const auto domain = Domain::unit_disk();
  for (auto _ : state) {
    auto sol = solve_extremal(domain, BasePoint::at({0.3, 0}), {degree, degree});
    benchmark::DoNotOptimize(sol.gamma);
  }
}
BENCHMARK(BM_DiskSolve)->Arg(8)->Arg(12)->Arg(16);

static void BM_AnnulusSolve(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const auto domain = Domain::circle_domain({{0, 0}, 1.0}, {{{0, 0}, 0.3}});
  for (auto _ : state) {
    auto sol = solve_extremal(domain, BasePoint::at({0.6, 0}), {degree, degree});
    benchmark::DoNotOptimize(sol.gamma);
  }
}
BENCHMARK(BM_AnnulusSolve)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_StripMap(benchmark::State& state) {
  const RealSlitSet slits({{-1.0, 1.0}, {2.0, 3.0}});
  const QuadratureSpec q{static_cast<int>(state.range(0))};
  const Complex z(0.4, 0.7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(strip_map(slits, z, q));
  }
}
BENCHMARK(BM_StripMap)->Arg(128)->Arg(1024)->Arg(8192);

static void BM_SampleBoundary(benchmark::State& state) {
  const auto domain = Domain::circle_domain({{0, 0}, 1.0}, {{{0.4, 0}, 0.2}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_boundary(domain, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_SampleBoundary)->Arg(512)->Arg(2048);

static void BM_Valence(benchmark::State& state) {
  const auto domain = Domain::circle_domain({{0, 0}, 1.0}, {{{0, 0}, 0.3}});
  const auto sol = solve_extremal(domain, BasePoint::at({0.6, 0}), {12, 12});
  const auto fn = to_analytic(sol);
  for (auto _ : state) {
    benchmark::DoNotOptimize(valence(fn, domain, Complex(0.1, 0.0),
                                     static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_Valence)->Arg(1024)->Arg(4096);

static void BM_DerivativeAtInfinity(benchmark::State& state) {
  const auto f = ahlfors_real_slit(RealSlitSet({{-1.0, 1.0}}));
  const auto fn = f.function();
  for (auto _ : state) {
    benchmark::DoNotOptimize(derivative_at_infinity(fn));
  }
}
BENCHMARK(BM_DerivativeAtInfinity);

BENCHMARK_MAIN();
