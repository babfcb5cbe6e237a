#include <cmath>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "wavecone/error.hpp"
#include "wavecone/io.hpp"
#include "wavecone/nonlinear.hpp"

using namespace wavecone;

TEST_CASE("shortest round-trip formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-2.5e-300) == "-2.5e-300");
  const double x = 0.1 + 0.2;
  CHECK(std::stod(format_double(x)) == x);
  CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
}

TEST_CASE("state csv round trip") {
  const auto s = testing::random_bumps(1)[0].on(testing::grid_to(6.0, 1.0 / 16));
  std::stringstream ss;
  write_state_csv(ss, s);
  const auto t = read_state_csv(ss);
  CHECK(t.grid == s.grid);
  CHECK(t.u == s.u);
  CHECK(t.v == s.v);
  std::stringstream shifted("r,u,ut\n1,0,0\n2,0,0\n");
  CHECK_THROWS_AS(read_state_csv(shifted), Error);
  std::stringstream header("x,y\n");
  CHECK_THROWS_AS(read_state_csv(header), Error);
}

TEST_CASE("snapshot and virial writers") {
  const Dimension d(3);
  const auto s = testing::random_bumps(1)[0].on(testing::grid_to(8.0, 1.0 / 32));
  SchemeOptions opt;
  opt.nonlinear = false;
  const auto traj = evolve_nonlinear(s, 1.0, d, opt);
  std::stringstream ss;
  write_snapshots_csv(ss, traj, 4);
  std::string line;
  std::getline(ss, line);
  CHECK(line == "t,r,u,ut");
  std::size_t rows = 0;
  while (std::getline(ss, line)) ++rows;
  CHECK(rows == traj.snapshots.size() * ((s.grid.size() + 3) / 4));
}
