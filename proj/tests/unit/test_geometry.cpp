#include <cmath>
#include <numbers>

#include "doctest.h"
#include "wavecone/error.hpp"
#include "wavecone/geometry.hpp"

using namespace wavecone;
using std::numbers::pi;

TEST_CASE("angles and membership") {
  const double e1[3] = {1.0, 0.0, 0.0};
  const double m[3] = {-1.0, 0.0, 0.0};
  const double y[3] = {0.0, 2.0, 0.0};
  CHECK(angle_to_e1(e1) == 0.0);
  CHECK(angle_to_e1(m) == doctest::Approx(pi));
  CHECK(angle_to_e1(y) == doctest::Approx(0.5 * pi));
  CHECK(in_gamma(m, 0.3));
  CHECK_FALSE(in_gamma(y, 0.3));
  const double zero[3] = {0.0, 0.0, 0.0};
  CHECK(in_gamma(zero, 0.3));
  CHECK(dist_gamma(m, 0.3) == 0.0);
  CHECK(dist_gamma(e1, 0.3) == doctest::Approx(1.0));
  // perpendicular to e1: distance to the cone of half-angle pi/2 - theta about -e1
  CHECK(dist_gamma(y, 0.3) == doctest::Approx(2.0 * std::sin(0.3)));
}

TEST_CASE("distance is 1-Lipschitz and rotation invariant") {
  UniformSource rng(3);
  for (int k = 0; k < 2000; ++k) {
    double x[4], z[4], rot[4];
    for (int j = 0; j < 4; ++j) {
      x[j] = 6.0 * rng.next() - 3.0;
      z[j] = x[j] + 0.2 * (2.0 * rng.next() - 1.0);
    }
    const double th = 0.05 + 1.4 * rng.next();
    double dxz = 0.0;
    for (int j = 0; j < 4; ++j) dxz += (x[j] - z[j]) * (x[j] - z[j]);
    CHECK(std::abs(dist_gamma(x, th) - dist_gamma(z, th)) <= std::sqrt(dxz) + 1e-12);
    // rotate in the (x2, x3) plane
    const double a = 2.0 * pi * rng.next();
    rot[0] = x[0];
    rot[1] = std::cos(a) * x[1] - std::sin(a) * x[2];
    rot[2] = std::sin(a) * x[1] + std::cos(a) * x[2];
    rot[3] = x[3];
    CHECK(dist_gamma(rot, th) == doctest::Approx(dist_gamma(x, th)).epsilon(1e-12));
  }
}

TEST_CASE("closed-form distance against sampling") {
  UniformSource rng(5);
  for (int k = 0; k < 6; ++k) {
    double x[3];
    for (double& v : x) v = 4.0 * rng.next() - 2.0;
    const double th = 0.1 + 1.3 * rng.next();
    const double exact = dist_gamma(x, th);
    const double r = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    CHECK(dist_gamma_sampled(x, th, 800, 400, 2.0 * r + 1.0) == doctest::Approx(exact).epsilon(1e-3));
  }
}

TEST_CASE("elementary properties of D") {
  const auto rep = cone_property_check({3.0, 0.2, 0.5}, 100000, 3);
  CHECK(rep.small_ball.checked > 0);
  CHECK(rep.small_ball.ok());
  CHECK(rep.wide_angle.ok());
  CHECK(rep.shell_angle_2x.ok());
  // same seed, same report
  const auto again = cone_property_check({3.0, 0.2, 0.5}, 100000, 3);
  CHECK(again.shell_angle.min_slack == rep.shell_angle.min_slack);
  CHECK_THROWS_AS(cone_property_check({-1.0, 0.2, 0.5}, 10, 3), ConfigError);
  CHECK_THROWS_AS(cone_property_check({1.0, 2.0, 0.5}, 10, 3), ConfigError);
}

TEST_CASE("the sqrt bound fails once the shell is thick") {
  // x at |x| = tau + ell on the edge of D has angle theta + acos(tau / (tau + ell)),
  // which exceeds theta + sqrt(ell / (tau + ell)) for tau = 10, ell = 1.
  const double tau = 10.0, theta = 0.1, ell = 1.0;
  const double eps = std::acos(tau / (tau + ell));
  CHECK(eps > std::sqrt(ell / (tau + ell)));
  CHECK(eps <= 2.0 * std::sqrt(ell / (tau + ell)));
  const double a = theta + eps - 1e-6;
  const double x[3] = {(tau + ell) * std::cos(a), (tau + ell) * std::sin(a), 0.0};
  CHECK(in_D(x, tau, theta));
  const auto rep = cone_property_check({tau, theta, ell}, 200000, 3);
  CHECK(rep.shell_angle.violations > 0);
  CHECK(rep.shell_angle_2x.ok());
}

TEST_CASE("cosine inequality") {
  const auto rep = cos_inequality_check(10000);
  CHECK(rep.ok());
  CHECK(rep.checked == 10000);
  CHECK(rep.min_slack == 0.0);  // equality at s = 0
  CHECK(1.0 - std::cos(0.5 * pi) - pi * pi / 16.0 == doctest::Approx(1.0 - 0.6168502750680849));
}
