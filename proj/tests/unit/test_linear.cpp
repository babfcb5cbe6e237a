#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "wavecone/energy.hpp"
#include "wavecone/error.hpp"
#include "wavecone/linear.hpp"

using namespace wavecone;
using testing::bump;

namespace {

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("exact 3d propagator matches d'Alembert for r u") {
  // r u(t, r) = F(r - t) - F(-r - t) with F odd-extended; take u0 = 0, u1 = bump
  // and compare with the closed form of the spherical mean.
  const auto g = testing::grid_to(16.0, 1.0 / 256);
  const auto data = RadialState::from_functions(
      g, [](double r) { return bump(r, 2.0, 1.0); }, [](double) { return 0.0; });
  const auto s = evolve_linear_exact_3d(data, 5.0);
  // for u1 = 0: r u = ((r-t) f(r-t) + (r+t) f(r+t)) / 2 with f even
  for (double r : {0.5, 2.7, 6.0, 7.4}) {
    const double t = 5.0;
    auto f = [](double x) { return bump(std::abs(x), 2.0, 1.0); };
    const double exact = 0.5 * ((r - t) * f(r - t) + (r + t) * f(r + t)) / r;
    CHECK(g.interpolate(s.u, r) == doctest::Approx(exact).epsilon(1e-3).scale(1.0));
  }
  // time reversibility
  const auto back = evolve_linear_exact_3d(s, -5.0);
  CHECK(max_diff(back.u, data.u) < 1e-4);  // O(dr^2): the data are sampled, not exact
}

TEST_CASE("numeric and exact propagators agree in three dimensions") {
  const Dimension d(3);
  const auto b = testing::random_bumps(1)[0];
  double prev = 0.0;
  for (double dr : {1.0 / 128, 1.0 / 256}) {
    const auto data = b.on(testing::grid_to(12.0, dr));
    const auto e = evolve_linear_exact_3d(data, 4.0);
    const auto n = evolve_linear_numeric(data, 4.0, d);
    const double err = max_diff(e.u, n.u);
    if (prev > 0.0) CHECK(std::log2(prev / err) > 1.7);
    prev = err;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("free energy is conserved by the numeric propagator") {
  for (int n : {3, 4, 5}) {
    const Dimension d(n);
    const auto data = testing::random_bumps(2)[1].on(testing::grid_to(14.0, 1.0 / 128));
    const auto s = evolve_linear_numeric(data, 8.0, d);
    CHECK(linear_energy(s, d) == doctest::Approx(linear_energy(data, d)).epsilon(1e-3));
  }
}

TEST_CASE("causal window is enforced") {
  const auto data = testing::random_bumps(1)[0].on(testing::grid_to(6.0, 1.0 / 64));
  CHECK_THROWS_AS(evolve_linear_numeric(data, 5.0, Dimension(4)), DomainTooSmall);
  CHECK_NOTHROW(evolve_linear_numeric(data, 5.0, Dimension(4), kDefaultCfl, BoundaryPolicy::frozen));
  CHECK_THROWS_AS(evolve_linear_exact_3d(data, 5.0), DomainTooSmall);
  LinearEvolution ev{data, Dimension(4), LinearMethod::exact_3d};
  CHECK_THROWS_AS(ev.validate(), ConfigError);
}

TEST_CASE("inhomogeneous solver") {
  const Dimension d(4);
  const auto data = testing::random_bumps(1)[0].on(testing::grid_to(10.0, 1.0 / 128));
  const auto free = evolve_linear_numeric(data, 3.0, d);
  const auto forced = solve_inhomogeneous(data, {}, 3.0, d);
  CHECK(max_diff(free.u, forced.u) == 0.0);

  // u = t^2 / 2 solves u_tt - Delta u = 1 from zero data, away from the boundary
  const auto g = RadialGrid::from_spacing(8.0, 1.0 / 64);
  const auto s = solve_inhomogeneous(
      RadialState::zero(g), [](double, std::span<double> out) { std::fill(out.begin(), out.end(), 1.0); },
      2.0, d, kDefaultCfl, BoundaryPolicy::frozen);
  CHECK(s.u[10] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(s.v[10] == doctest::Approx(2.0).epsilon(1e-10));

  TabulatedSource tab({0.0, 1.0}, {std::vector<double>(3, 0.0), std::vector<double>(3, 2.0)});
  std::vector<double> out(3, 0.0);
  tab(0.25, out);
  CHECK(out[1] == doctest::Approx(0.5));
  std::fill(out.begin(), out.end(), 0.0);
  tab(1.5, out);
  CHECK(out[1] == 0.0);
}
