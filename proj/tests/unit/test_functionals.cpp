#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fixtures.hpp"
#include "wavecone/energy.hpp"
#include "wavecone/error.hpp"
#include "wavecone/functionals.hpp"
#include "wavecone/solitons.hpp"

using namespace wavecone;
using std::numbers::pi;

TEST_CASE("cutoff profile") {
  const double alpha = 2.0;
  CHECK(cutoff(0.0, alpha) == 1.0);
  CHECK(cutoff(0.5, alpha) == 1.0);
  CHECK(cutoff(1.0, alpha) == 0.0);
  CHECK(cutoff(3.0, alpha) == 0.0);
  double prev = 1.0;
  for (double r = 0.5; r <= 1.0; r += 0.01) {
    CHECK(cutoff(r, alpha) <= prev);
    prev = cutoff(r, alpha);
    const double h = 1e-6;
    const double fd = (cutoff(r + h, alpha) - cutoff(r - h, alpha)) / (2 * h);
    CHECK(cutoff_derivative(r, alpha) == doctest::Approx(fd).epsilon(1e-5).scale(1.0));
  }
}

TEST_CASE("e1 norm: closed reduction against axisymmetric quadrature") {
  for (int n : {3, 4, 5}) {
    const Dimension d(n);
    for (const auto& b : testing::random_bumps(2, 11)) {
      const auto s = b.on(testing::grid_to(6.0, 1.0 / 256));
      const double e1 = e1_norm(s, d);
      CHECK(e1 * e1 == doctest::Approx(2.0 * linear_energy(s, d)).epsilon(1e-10));
      CHECK(e1_norm_axisymmetric(s, d) == doctest::Approx(e1).epsilon(1e-8));
    }
  }
}

TEST_CASE("strichartz norm of the static ground state") {
  // N = 3, q = 10: int W^10 dx = 180 sqrt(3) pi^2 / 768, norm over [0, T] is
  // (T (int W^10)^{1/2})^{1/5}
  const Dimension d(3);
  const auto g = RadialGrid::from_spacing(60.0, 1.0 / 64);
  SchemeOptions opt;
  opt.boundary = BoundaryPolicy::frozen;
  opt.nonlinear = true;
  const auto traj = evolve_nonlinear(ground_state(g, d), 1.0, d, opt);
  const double iw = 180.0 * std::sqrt(3.0) * pi * pi / 768.0;
  const double exact = std::pow(std::sqrt(iw), 0.2);
  CHECK(strichartz_norm(traj, RegionSpec::slab(0.0, 1.0)) == doctest::Approx(exact).epsilon(1e-3));
  // exterior cone at A = 1 sees only the tail
  CHECK(strichartz_norm(traj, RegionSpec::exterior_cone(1.0).during(0.0, 1.0)) < exact);
  CHECK_THROWS_AS(strichartz_norm(traj, RegionSpec::slab(0.0, 5.0)), RangeError);
}

TEST_CASE("localized Pohozaev identity for W") {
  for (int n : {3, 4, 5}) {
    const auto p = localized_pohozaev_check(Dimension(n), 4.0, 0.0);
    CHECK(p.relative_residual < 1e-8);
    CHECK(localized_pohozaev_check(Dimension(n), 3.0, 1.0).relative_residual < 1e-8);
  }
}

TEST_CASE("virial report structure and convergence") {
  const Dimension d(3);
  auto run = [&](double dr) {
    const auto g = testing::grid_to(8.0, dr);
    const auto s = RadialState::from_functions(
        g, [](double r) { return 0.5 * testing::bump(r, 1.0, 1.0); },
        [](double r) { return 0.3 * testing::bump(r, 1.2, 0.8); });
    return evolve_nonlinear(s, 2.0, d);
  };
  const auto coarse_traj = run(1.0 / 64);
  const auto coarse = virial_report(coarse_traj, 3.0, 0.0);
  const auto fine = virial_report(run(1.0 / 128), 3.0, 0.0);
  // centered differences need a neighbour on each side
  CHECK(coarse.rows.size() == (coarse.times.size() - 2) * virial_identities().size());
  for (double x : coarse.d) CHECK(x == 0.0);
  CHECK(coarse.max_residual("energy_moment") == 0.0);
  CHECK(coarse.max_residual("momentum") == 0.0);
  for (const char* id : {"u_ut", "dilation", "energy"}) {
    const double order = std::log2(coarse.max_residual(id) / fine.max_residual(id));
    CHECK_MESSAGE(order > 1.7, id);
  }
  CHECK_THROWS_AS(coarse.max_residual("nope"), ConfigError);
  CHECK_THROWS_AS(virial_report(coarse_traj, 3.0, 7.0), RangeError);

  const auto off = virial_report(coarse_traj, 3.0, 1.0, 32);
  double dmax = 0.0;
  for (double x : off.d) dmax = std::max(dmax, std::abs(x));
  CHECK(dmax > 0.0);
}
