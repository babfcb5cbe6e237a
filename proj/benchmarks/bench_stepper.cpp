#include <benchmark/benchmark.h>

#include <cmath>

#include "wavecone/linear.hpp"
#include "wavecone/nonlinear.hpp"
#include "wavecone/stepper.hpp"

using namespace wavecone;

// One leapfrog step on a grid of state.range(0) nodes.
static void BM_LeapfrogStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  const auto nodes = static_cast<std::size_t>(state.range(0));
  const double dr = 1.0 / 256;
  const auto grid = RadialGrid::from_spacing(dr * static_cast<double>(nodes - 1), dr);
  const Dimension dim(n);
  LeapfrogStepper st(grid, dim);
  auto u = sample(grid, [](double r) { return std::exp(-r * r); });
  std::vector<double> v(grid.size(), 0.0), a(grid.size());
  const Forcing f = [dim](double, std::span<const double> x, std::span<double> out) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = dim.nonlinearity(x[i]);
  };
  st.acceleration(0.0, u, a, f);
  double t = 0.0;
  const double h = 0.5 * dr;
  for (auto _ : state) {
    st.step(u, v, a, t, h, f);
    t += h;
    benchmark::DoNotOptimize(u.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(nodes));
}
BENCHMARK(BM_LeapfrogStep)->ArgsProduct({{1 << 12, 1 << 15}, {3, 4, 5}});

static void BM_ExactPropagator3d(benchmark::State& state) {
  const double dr = 1.0 / static_cast<double>(state.range(0));
  const auto grid = RadialGrid::from_spacing(24.0, dr);
  const auto data = RadialState::from_functions(
      grid,
      [](double r) {
        const double s = r - 2.0;
        return std::abs(s) < 1.0 ? std::pow(1.0 - s * s, 4) : 0.0;
      },
      [](double) { return 0.0; });
  for (auto _ : state) benchmark::DoNotOptimize(evolve_linear_exact_3d(data, 10.0));
}
BENCHMARK(BM_ExactPropagator3d)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_NonlinearRun(benchmark::State& state) {
  const Dimension dim(3);
  const auto grid = RadialGrid::from_spacing(12.0, 1.0 / 128);
  const auto data = RadialState::from_functions(
      grid,
      [](double r) {
        const double s = r - 1.5;
        return std::abs(s) < 1.0 ? 0.5 * std::pow(1.0 - s * s, 4) : 0.0;
      },
      [](double) { return 0.0; });
  for (auto _ : state) benchmark::DoNotOptimize(evolve_nonlinear(data, 4.0, dim));
}
BENCHMARK(BM_NonlinearRun)->Unit(benchmark::kMillisecond);
