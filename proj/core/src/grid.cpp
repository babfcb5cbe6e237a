#include <algorithm>
#include <cmath>
#include <string>

#include "wavecone/error.hpp"
#include "wavecone/grid.hpp"
#include "wavecone/state.hpp"

namespace wavecone {

RadialGrid RadialGrid::from_spacing(double r_max, double dr) {
  if (!(dr > 0.0) || !(r_max > 0.0) || !std::isfinite(r_max)) {
    throw ConfigError("grid requires r_max > 0 and dr > 0");
  }
  const double cells = r_max / dr;
  const auto n_cells = static_cast<std::size_t>(std::llround(cells));
  if (std::abs(cells - static_cast<double>(n_cells)) > 1e-9 * std::max(1.0, cells)) {
    throw ConfigError("r_max must be an integer multiple of dr");
  }
  const std::size_t n = n_cells + 1;
  if (n < kMinNodes) {
    throw ConfigError("grid needs at least " + std::to_string(kMinNodes) + " nodes");
  }
  return RadialGrid(static_cast<double>(n_cells) * dr, dr, n);
}

RadialGrid RadialGrid::from_nodes(double r_max, std::size_t n) {
  if (n < kMinNodes) {
    throw ConfigError("grid needs at least " + std::to_string(kMinNodes) + " nodes");
  }
  if (!(r_max > 0.0) || !std::isfinite(r_max)) {
    throw ConfigError("grid requires r_max > 0");
  }
  return RadialGrid(r_max, r_max / static_cast<double>(n - 1), n);
}

std::vector<double> RadialGrid::nodes() const {
  std::vector<double> r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = node(i);
  return r;
}

std::size_t RadialGrid::floor_index(double r) const noexcept {
  if (!(r > 0.0)) return 0;
  const auto i = static_cast<std::size_t>(std::floor(r / dr_));
  return std::min(i, n_ - 1);
}

double RadialGrid::interpolate(std::span<const double> f, double r) const noexcept {
  if (r < 0.0 || r > r_max_ * (1.0 + 1e-14)) return 0.0;
  const double x = r / dr_;
  auto i = static_cast<std::size_t>(x);
  if (i >= n_ - 1) return f[n_ - 1];
  const double s = x - static_cast<double>(i);
  return (1.0 - s) * f[i] + s * f[i + 1];
}

std::vector<double> sample(const RadialGrid& grid, const std::function<double(double)>& f) {
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(grid.node(i));
  return out;
}

RadialState RadialState::zero(const RadialGrid& grid, double t) {
  return RadialState{grid, t, std::vector<double>(grid.size(), 0.0),
                     std::vector<double>(grid.size(), 0.0)};
}

RadialState RadialState::from_functions(const RadialGrid& grid,
                                        const std::function<double(double)>& u0,
                                        const std::function<double(double)>& u1, double t) {
  return RadialState{grid, t, sample(grid, u0), sample(grid, u1)};
}

void RadialState::validate() const {
  if (u.size() != grid.size() || v.size() != grid.size()) {
    throw InvalidState("state arrays do not match the grid size");
  }
  if (!std::isfinite(t)) throw InvalidState("state time is not finite");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!std::isfinite(u[i]) || !std::isfinite(v[i])) {
      throw InvalidState("non-finite value at node " + std::to_string(i));
    }
  }
}

double RadialState::support_radius(double rel_tol) const {
  double scale = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    scale = std::max({scale, std::abs(u[i]), std::abs(v[i])});
  }
  if (scale == 0.0) return 0.0;
  const double cut = rel_tol * scale;
  for (std::size_t i = u.size(); i-- > 0;) {
    if (std::abs(u[i]) > cut || std::abs(v[i]) > cut) return grid.node(i);
  }
  return 0.0;
}

double RadialState::sup_norm() const noexcept {
  double m = 0.0;
  for (double x : u) m = std::max(m, std::abs(x));
  return m;
}

RadialState resample(const RadialState& state, const RadialGrid& grid) {
  if (state.grid == grid) return state;
  RadialState out = RadialState::zero(grid, state.t);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double r = grid.node(i);
    out.u[i] = state.grid.interpolate(state.u, r);
    out.v[i] = state.grid.interpolate(state.v, r);
  }
  return out;
}

RadialState combine(double a, const RadialState& x, double b, const RadialState& y) {
  if (!(x.grid == y.grid)) throw InvalidState("combine: states live on different grids");
  RadialState out = x;
  for (std::size_t i = 0; i < out.u.size(); ++i) {
    out.u[i] = a * x.u[i] + b * y.u[i];
    out.v[i] = a * x.v[i] + b * y.v[i];
  }
  return out;
}

}  // namespace wavecone
