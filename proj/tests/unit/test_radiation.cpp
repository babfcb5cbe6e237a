#include <cmath>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "wavecone/energy.hpp"
#include "wavecone/error.hpp"
#include "wavecone/io.hpp"
#include "wavecone/radiation.hpp"

using namespace wavecone;

TEST_CASE("radiation field carries the free energy in three dimensions") {
  const Dimension d(3);
  for (const auto& b : testing::random_bumps(3, 7)) {
    const auto data = b.on(testing::grid_to(16.0, 1.0 / 512));
    LinearEvolution ev{data, d, LinearMethod::exact_3d};
    const auto p = extract_radiation(ev, 10.0, -5.0, 5.0);
    const double e = linear_energy(data, d);
    CHECK(std::abs(p.norm_squared() - e) / e < 1e-5);
    CHECK(incoming_residual(ev, 10.0, -5.0, 5.0) < 1e-3);
    CHECK_NOTHROW(p.validate());
  }
}

TEST_CASE("primitive orientation") {
  // r^{(N-1)/2} v(T, T + eta) tends to g(eta), with d_eta g = -G
  const Dimension d(3);
  const auto data = testing::random_bumps(1)[0].on(testing::grid_to(20.0, 1.0 / 256));
  LinearEvolution ev{data, d, LinearMethod::exact_3d};
  const auto p = extract_radiation(ev, 12.0, -5.0, 5.0);
  const auto s = ev.at(12.0);
  for (double eta : {-2.0, -0.5, 0.7, 1.9}) {
    const double r = 12.0 + eta;
    CHECK(r * s.grid.interpolate(s.u, r) == doctest::Approx(p.g_at(eta)).epsilon(1e-3).scale(1.0));
  }
  double max_res = 0.0;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    max_res = std::max(max_res, std::abs((p.g[i + 1] - p.g[i - 1]) / (2 * p.d_eta) + p.G[i]));
  }
  CHECK(max_res < 1e-3);
}

TEST_CASE("extraction needs the window outside the origin") {
  const auto data = testing::random_bumps(1)[0].on(testing::grid_to(12.0, 1.0 / 64));
  LinearEvolution ev{data, Dimension(3), LinearMethod::exact_3d};
  CHECK_THROWS_AS(extract_radiation(ev, 2.0, -4.0, 2.0), RangeError);
}

TEST_CASE("gaussian profile round trip in three dimensions") {
  const Dimension d(3);
  const double dr = 1.0 / 256;
  const auto p = gaussian_profile(d, 0.0, 0.4, -4.0, 4.0, dr);
  CHECK_NOTHROW(p.validate());
  InverseOptions opt;
  opt.dr = dr;
  auto data = inverse_radiation(p, opt);
  // the isometry holds for the reconstruction too
  CHECK(linear_energy(data, d) == doctest::Approx(p.norm_squared()).epsilon(1e-3));
  data = resample(data, testing::grid_to(data.grid.r_max() + 18.0, dr));
  const auto q = extract_radiation(LinearEvolution{data, d, LinearMethod::exact_3d}, 10.0, -4.0, 4.0);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    num += std::pow(p.G[i] - q.G_at(p.eta(i)), 2);
    den += p.G[i] * p.G[i];
  }
  CHECK(std::sqrt(num / den) < 1e-4);
}

TEST_CASE("inverse needs a compact primitive") {
  const Dimension d(3);
  auto p = gaussian_profile(d, 3.5, 1.0, -4.0, 4.0, 1.0 / 64);
  CHECK_THROWS_AS(inverse_radiation(p), RangeError);
  p.g.clear();
  CHECK_THROWS_AS(inverse_radiation(p), Error);
}

TEST_CASE("profile csv round trip") {
  const auto p = gaussian_profile(Dimension(4), 0.0, 0.5, -3.0, 3.0, 1.0 / 32);
  std::stringstream ss;
  write_profile_csv(ss, p);
  const auto q = read_profile_csv(ss, Dimension(4));
  REQUIRE(q.size() == p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    CHECK(q.G[i] == p.G[i]);
    CHECK(q.g[i] == p.g[i]);
  }
  CHECK(q.eta_min == p.eta_min);
  std::stringstream bad("eta,G,g\n0,1,2\n0.5,1\n");
  CHECK_THROWS_AS(read_profile_csv(bad, Dimension(3)), Error);
}

TEST_CASE("conformal profile and interior decay") {
  const Dimension d(3);
  const auto data = testing::random_bumps(1)[0].on(testing::grid_to(40.0, 1.0 / 128));
  LinearEvolution ev{data, d, LinearMethod::exact_3d};
  // F(rho, 0) is the primitive at eta = rho
  const auto p = extract_radiation(ev, 20.0, -5.0, 5.0);
  CHECK(conformal_profile(ev, 0.5, 0.0) == doctest::Approx(p.g_at(0.5)).epsilon(1e-3).scale(1.0));
  const std::vector<double> times = {5.0, 10.0, 20.0};
  const auto rows = vanishing_interior_check(ev, 4.0, times);
  REQUIRE(rows.size() == 3);
  CHECK(rows[2].hardy < rows[0].hardy);
  CHECK(rows[2].interior_energy < 1e-8);
}

TEST_CASE("channels of energy reach one half") {
  const auto g = testing::grid_to(32.0, 1.0 / 256);
  const auto u = sample(g, [](double r) { return testing::bump(r, 1.5, 1.0); });
  const std::vector<double> zero(g.size(), 0.0);
  const std::vector<double> times = {0.0, 20.0};
  for (const auto& data : {RadialState{g, 0.0, u, zero}, RadialState{g, 0.0, zero, u}}) {
    const auto rows = channels_exterior_energy(data, times);
    CHECK(rows.front().fraction == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(rows.back().fraction == doctest::Approx(0.5).epsilon(1e-2));
  }
}
