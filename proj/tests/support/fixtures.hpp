#pragma once

#include <cmath>
#include <vector>

#include "wavecone/geometry.hpp"
#include "wavecone/grid.hpp"
#include "wavecone/state.hpp"

namespace wavecone::testing {

/// (1 - s^2)^4 on |s| < 1, C^3 and compactly supported.
inline double bump(double r, double center, double width) {
  const double s = (r - center) / width;
  if (std::abs(s) >= 1.0) return 0.0;
  const double q = 1.0 - s * s;
  return q * q * q * q;
}

struct BumpData {
  double a0, c0, w0;  // position bump
  double a1, c1, w1;  // velocity bump

  double support() const { return std::max(c0 + w0, c1 + w1); }

  RadialState on(const RadialGrid& grid) const {
    return RadialState::from_functions(
        grid, [&](double r) { return a0 * bump(r, c0, w0); },
        [&](double r) { return a1 * bump(r, c1, w1); });
  }
};

/// Reproducible family of compactly supported radial data, support <= 4.
inline std::vector<BumpData> random_bumps(std::size_t n, std::uint64_t seed = 42) {
  UniformSource rng(seed);
  std::vector<BumpData> out;
  for (std::size_t k = 0; k < n; ++k) {
    BumpData b;
    b.a0 = 0.5 + 1.5 * rng.next();
    b.c0 = 1.0 + 1.5 * rng.next();
    b.w0 = 0.5 + rng.next();
    b.a1 = 2.0 * rng.next() - 1.0;
    b.c1 = 1.0 + 1.5 * rng.next();
    b.w1 = 0.5 + rng.next();
    out.push_back(b);
  }
  return out;
}

/// Grid of spacing dr reaching at least r (rounded up to a whole cell).
inline RadialGrid grid_to(double r, double dr) {
  return RadialGrid::from_spacing(std::ceil(r / dr) * dr, dr);
}

}  // namespace wavecone::testing
