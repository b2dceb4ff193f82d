// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <cmath>

#include "nhydro/hydrogenic.hpp"
#include "nhydro/quadrature.hpp"
#include "nhydro/specfun.hpp"
#include "nhydro/transforms.hpp"
#include "nhydro/verify.hpp"

namespace {

using namespace nhydro;

// Oscillatory radial integrand of the kind the Fourier oracle sees.
double radial_integrand(double r) {
  return std::pow(r, 6.0) * std::exp(-0.25 * r) * specfun::bessel_j_eval({3.5}, 1.7 * r);
}

void BM_CompositeSerial(benchmark::State& state) {
  const auto& rule = quad::gauss_legendre(quad::kPanelOrder);
  const int panels = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(quad::composite_serial(radial_integrand, 0.0, 200.0, panels, rule));
  }
  state.SetItemsProcessed(state.iterations() * panels * quad::kPanelOrder);
}

void BM_CompositeParallel(benchmark::State& state) {
  const auto& rule = quad::gauss_legendre(quad::kPanelOrder);
  const int panels = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(quad::composite_parallel(radial_integrand, 0.0, 200.0, panels, rule));
  }
  state.SetItemsProcessed(state.iterations() * panels * quad::kPanelOrder);
}

BENCHMARK(BM_CompositeSerial)->RangeMultiplier(4)->Range(64, 4096)->UseRealTime();
BENCHMARK(BM_CompositeParallel)->RangeMultiplier(4)->Range(64, 4096)->UseRealTime();

void BM_FourierOracle(benchmark::State& state) {
  const auto st = hydrogenic::make_state(7, 6, 5);
  quad::QuadratureSpec spec;
  spec.parallel = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(transforms::radial_fourier_oracle(st, 1.25, spec));
  }
}

BENCHMARK(BM_FourierOracle)->Arg(0)->Arg(1)->ArgNames({"parallel"})->UseRealTime();

void BM_FourierSuite(benchmark::State& state) {
  verify::VerifyOptions opt;
  opt.only_N = 5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify::run_suites({"fourier"}, opt));
  }
}

BENCHMARK(BM_FourierSuite)->Unit(benchmark::kMillisecond)->UseRealTime()->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
