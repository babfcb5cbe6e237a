#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fixtures.hpp"
#include "wavecone/dimension.hpp"
#include "wavecone/energy.hpp"
#include "wavecone/error.hpp"
#include "wavecone/quadrature.hpp"
#include "wavecone/stepper.hpp"

using namespace wavecone;
using std::numbers::pi;

TEST_CASE("dimension exponents") {
  CHECK_THROWS_AS(Dimension(2), ConfigError);
  CHECK_THROWS_AS(Dimension(6), ConfigError);
  const Dimension d3(3), d4(4), d5(5);
  CHECK(d3.power() == doctest::Approx(5.0));
  CHECK(d4.power() == doctest::Approx(3.0));
  CHECK(d5.power() == doctest::Approx(7.0 / 3.0));
  CHECK(d3.critical_exponent() == doctest::Approx(6.0));
  CHECK(d5.strichartz_exponent() == doctest::Approx(14.0 / 3.0));
  CHECK(d3.sphere_area() == doctest::Approx(4.0 * pi));
  CHECK(d4.sphere_area() == doctest::Approx(2.0 * pi * pi));
  CHECK(d5.sphere_area() == doctest::Approx(8.0 * pi * pi / 3.0));
  CHECK(d3.equator_area() == doctest::Approx(2.0 * pi));
  for (const Dimension d : {d3, d4, d5}) {
    for (const double u : {-1.7, -0.3, 0.0, 0.4, 2.2}) {
      CHECK(d.nonlinearity(u) == doctest::Approx(std::pow(std::abs(u), d.power() - 1.0) * u));
      CHECK(d.critical_power(u) == doctest::Approx(std::pow(std::abs(u), d.critical_exponent())));
    }
  }
}

TEST_CASE("grid construction and interpolation") {
  CHECK_THROWS_AS(RadialGrid::from_spacing(1.0, 0.3), ConfigError);
  CHECK_THROWS_AS(RadialGrid::from_spacing(1.0, 0.25), ConfigError);  // too few nodes
  CHECK_THROWS_AS(RadialGrid::from_spacing(-1.0, 0.01), ConfigError);
  const auto g = RadialGrid::from_spacing(4.0, 0.125);
  CHECK(g.size() == 33);
  CHECK(g.node(8) == 1.0);
  const auto f = sample(g, [](double r) { return 3.0 * r - 1.0; });
  CHECK(g.interpolate(f, 1.3) == doctest::Approx(2.9));
  CHECK(g.interpolate(f, 5.0) == 0.0);
  CHECK(g.floor_index(1.3) == 10);
}

TEST_CASE("state validation and support") {
  const auto g = RadialGrid::from_spacing(8.0, 1.0 / 64);
  auto s = RadialState::from_functions(
      g, [](double r) { return testing::bump(r, 2.0, 1.0); }, [](double) { return 0.0; });
  CHECK(s.support_radius() == doctest::Approx(3.0).epsilon(0.01));
  CHECK(s.sup_norm() == doctest::Approx(1.0));
  s.u[5] = std::nan("");
  CHECK_THROWS_AS(s.validate(), InvalidState);
  s.u.pop_back();
  CHECK_THROWS_AS(s.validate(), InvalidState);
}

TEST_CASE("radial integrals of gaussians") {
  // int_{R^N} exp(-|x|^2) dx = pi^{N/2}
  for (int n : {3, 4, 5}) {
    const Dimension d(n);
    const auto g = RadialGrid::from_spacing(10.0, 1.0 / 256);
    const auto f = sample(g, [](double r) { return std::exp(-r * r); });
    CHECK(radial_integral(g, f, d) == doctest::Approx(std::pow(pi, 0.5 * n)).epsilon(1e-5));
  }
}

TEST_CASE("energy of a gaussian pair") {
  // u = exp(-r^2), u_t = exp(-r^2) in R^3:
  //   int u_t^2 = (pi/2)^{3/2}, int |grad u|^2 = 3 (pi/2)^{3/2}, int u^6 = (pi/6)^{3/2}
  const Dimension d(3);
  const auto g = RadialGrid::from_spacing(8.0, 1.0 / 512);
  const auto s = RadialState::from_functions(
      g, [](double r) { return std::exp(-r * r); }, [](double r) { return std::exp(-r * r); });
  const auto e = energy(s, d);
  const double k = std::pow(pi / 2.0, 1.5);
  CHECK(e.kinetic == doctest::Approx(0.5 * k).epsilon(1e-5));
  CHECK(e.gradient == doctest::Approx(1.5 * k).epsilon(1e-5));
  CHECK(e.potential == doctest::Approx(std::pow(pi / 6.0, 1.5) / 6.0).epsilon(1e-5));
  CHECK(e.total == doctest::Approx(e.kinetic + e.gradient - e.potential));
  CHECK(linear_energy(s, d) == doctest::Approx(e.kinetic + e.gradient));
}

TEST_CASE("region quadrature") {
  const auto g = RadialGrid::from_spacing(10.0, 1.0 / 128);
  const std::vector<double> one(g.size(), 1.0);
  // exterior cone at t = 2, A = 1: r in [3, 10]
  CHECK(integrate_slice(g, one, 2.0, RegionSpec::exterior_cone(1.0), RadialMeasure::plain()) ==
        doctest::Approx(7.0));
  // partial cells are exact for linear data
  const auto lin = sample(g, [](double r) { return r; });
  CHECK(integrate_interval(g, lin, 0.3, 2.71) == doctest::Approx(0.5 * (2.71 * 2.71 - 0.09)));
  // ball of radius 1 about 2 e1 in R^3 has volume 4 pi / 3
  const auto vol = integrate_slice(g, one, 0.0, RegionSpec::ball(1.0, 2.0), RadialMeasure::volume(Dimension(3)));
  CHECK(vol == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-3));
  // empty region
  CHECK(integrate_slice(g, one, 20.0, RegionSpec::exterior_cone(0.0), RadialMeasure::plain()) == 0.0);
  CHECK_THROWS_AS(RegionSpec::slab(2.0, 1.0).validate(), ConfigError);
  CHECK_THROWS_AS(RegionSpec::ball(0.0).validate(), ConfigError);

  SpaceTimeSamples st{g, {0.0, 1.0, 2.0, 3.0}, {}};
  for (double t : st.times) st.values.insert(st.values.end(), g.size(), t);
  // int_1^2 t * 10 dt = 15
  CHECK(quadrature_region(st, RegionSpec::full().during(1.0, 2.0), RadialMeasure::plain()) ==
        doctest::Approx(15.0));
}

TEST_CASE("angular rules integrate the sphere weight") {
  // int_{-1}^{1} (1 - mu^2)^{(N-3)/2} dmu * |S^{N-2}| = |S^{N-1}|
  for (int n : {3, 4, 5}) {
    const Dimension d(n);
    const auto rule = angular_rule(d, 32);
    double s = 0.0, m2 = 0.0;
    for (std::size_t j = 0; j < rule.mu.size(); ++j) {
      s += rule.weight[j];
      m2 += rule.weight[j] * rule.mu[j] * rule.mu[j];
    }
    CHECK(s * d.equator_area() == doctest::Approx(d.sphere_area()));
    // <mu^2> over the sphere is 1/N
    CHECK(m2 / s == doctest::Approx(1.0 / n));
  }
}

TEST_CASE("leapfrog laplacian is second order on smooth data") {
  for (int n : {3, 4, 5}) {
    const Dimension d(n);
    double prev = 0.0;
    for (double dr : {1.0 / 64, 1.0 / 128}) {
      const auto g = RadialGrid::from_spacing(8.0, dr);
      LeapfrogStepper st(g, d);
      const auto u = sample(g, [](double r) { return std::exp(-r * r); });
      std::vector<double> lap(g.size());
      st.laplacian(u, lap);
      double err = 0.0;
      for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        const double r = g.node(i);
        const double exact = (4.0 * r * r - 2.0 * n) * std::exp(-r * r);
        err = std::max(err, std::abs(lap[i] - exact));
      }
      if (prev > 0.0) CHECK(std::log2(prev / err) == doctest::Approx(2.0).epsilon(0.1));
      prev = err;
    }
  }
  CHECK(LeapfrogStepper::max_stable_cfl(Dimension(3)) > 0.5);
  CHECK(step_count(1.0, 0.01, 0.5) == 200);
}
