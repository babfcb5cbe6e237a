#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fixtures.hpp"
#include "wavecone/energy.hpp"
#include "wavecone/error.hpp"
#include "wavecone/solitons.hpp"

using namespace wavecone;

TEST_CASE("W solves the elliptic equation") {
  for (int n : {3, 4, 5}) {
    const Dimension d(n);
    CHECK(eval_W(0.0, d) == 1.0);
    for (double r : {0.3, 1.0, 4.0}) {
      const double h = 1e-4;
      const double w2 = (eval_W_prime(r + h, d) - eval_W_prime(r - h, d)) / (2 * h);
      const double lap = w2 + (n - 1) / r * eval_W_prime(r, d);
      CHECK(lap + std::pow(eval_W(r, d), d.power()) == doctest::Approx(0.0).scale(1.0).epsilon(1e-7));
    }
    const double fine = elliptic_residual(RadialGrid::from_spacing(20.0, 1.0 / 128), d, 10.0);
    const double coarse = elliptic_residual(RadialGrid::from_spacing(20.0, 1.0 / 64), d, 10.0);
    CHECK(std::log2(coarse / fine) == doctest::Approx(2.0).epsilon(0.15));
  }
  CHECK(eval_W(1.0, Dimension(3)) == doctest::Approx(1.0 / std::sqrt(1.0 + 1.0 / 3.0)));
}

TEST_CASE("ground state energy") {
  // N = 3: E(W) = ||grad W||^2 / 3 = sqrt(3) pi^2 / 4
  CHECK(ground_state_energy(Dimension(3)) == doctest::Approx(std::sqrt(3.0) * std::numbers::pi * std::numbers::pi / 4.0));
  for (int n : {3, 4, 5}) {
    const Dimension d(n);
    // against the grid energy of (W, 0) on a large frozen domain
    const auto g = RadialGrid::from_spacing(n == 3 ? 4000.0 : 400.0, 1.0 / 16);
    const double e = energy(ground_state(g, d), d).total;
    CHECK(e == doctest::Approx(ground_state_energy(d)).epsilon(n == 3 ? 2e-3 : 1e-3));
  }
}

TEST_CASE("soliton energy law") {
  for (int n : {3, 4, 5}) {
    const Dimension d(n);
    const double ew = ground_state_energy(d);
    for (double l : {0.0, 0.5, 0.9}) {
      SolitonSpec s;
      s.ell.assign(static_cast<std::size_t>(n), 0.0);
      s.ell[n - 1] = l;
      CHECK(soliton_energy(s, d) / ew == doctest::Approx(1.0 / std::sqrt(1.0 - l * l)).epsilon(1e-3));
    }
  }
  SolitonSpec bad;
  bad.ell = {1.0, 0.0, 0.0};
  CHECK_THROWS_AS(bad.validate(Dimension(3)), PreconditionError);
  bad.ell = {0.1, 0.0};
  CHECK_THROWS_AS(bad.validate(Dimension(3)), PreconditionError);
}

TEST_CASE("boosted soliton travels along ell") {
  const Dimension d(3);
  SolitonSpec s;
  s.ell = {0.6, 0.0, 0.0};
  const double x0[3] = {0.2, 0.1, 0.0};
  const double x1[3] = {0.2 + 0.6 * 2.0, 0.1, 0.0};
  CHECK(eval_Q_ell(2.0, x1, s, d) == doctest::Approx(eval_Q_ell(0.0, x0, s, d)));
  SolitonSpec rest;
  const double y[3] = {0.0, 1.0, 0.0};
  CHECK(eval_Q_ell(3.0, y, rest, d) == doctest::Approx(eval_W(1.0, d)));
}

TEST_CASE("fit recovers scale and sign") {
  for (int n : {3, 5}) {
    const Dimension d(n);
    const auto g = RadialGrid::from_spacing(200.0, 1.0 / 32);
    const auto fit = fit_soliton(ground_state(g, d, -1.0, 2.0), d);
    CHECK(fit.lambda == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(fit.sign == -1);
    CHECK(fit.residual < 1e-4);
  }
  const auto g = RadialGrid::from_spacing(10.0, 1.0 / 32);
  CHECK_THROWS_AS(fit_soliton(RadialState::zero(g), Dimension(3)), UndefinedFit);
}
