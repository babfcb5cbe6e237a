#include <benchmark/benchmark.h>

#include <cmath>

#include "wavecone/energy.hpp"
#include "wavecone/functionals.hpp"
#include "wavecone/quadrature.hpp"
#include "wavecone/solitons.hpp"

using namespace wavecone;

static void BM_ExteriorSlice(benchmark::State& state) {
  const auto grid = RadialGrid::from_spacing(64.0, 1.0 / static_cast<double>(state.range(0)));
  const auto f = sample(grid, [](double r) { return std::exp(-r); });
  const auto region = RegionSpec::exterior_cone(-2.0);
  const auto measure = RadialMeasure::volume(Dimension(3));
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_slice(grid, f, t, region, measure));
    t = t > 30.0 ? 0.0 : t + 0.01;
  }
}
BENCHMARK(BM_ExteriorSlice)->Arg(128)->Arg(1024);

static void BM_Energy(benchmark::State& state) {
  const auto grid = RadialGrid::from_spacing(64.0, 1.0 / 512);
  const auto s = ground_state(grid, Dimension(5));
  for (auto _ : state) benchmark::DoNotOptimize(energy(s, Dimension(5)));
}
BENCHMARK(BM_Energy);

static void BM_AxisymmetricE1(benchmark::State& state) {
  const auto grid = RadialGrid::from_spacing(8.0, 1.0 / 256);
  const auto s = RadialState::from_functions(
      grid, [](double r) { return std::exp(-r * r); }, [](double r) { return r * std::exp(-r * r); });
  const auto n_mu = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(e1_norm_axisymmetric(s, Dimension(4), n_mu));
}
BENCHMARK(BM_AxisymmetricE1)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_SolitonEnergy(benchmark::State& state) {
  SolitonSpec spec;
  spec.ell = {0.9, 0.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(soliton_energy(spec, Dimension(3)));
}
BENCHMARK(BM_SolitonEnergy)->Unit(benchmark::kMillisecond);

static void BM_GaussLegendre(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gauss_legendre(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_GaussLegendre)->Arg(16)->Arg(128);
