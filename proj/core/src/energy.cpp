#include "wavecone/energy.hpp"

#include <cmath>

namespace wavecone {

std::vector<double> radial_derivative(const RadialGrid& grid, std::span<const double> f) {
  const std::size_t n = grid.size();
  const double inv2h = 0.5 / grid.dr();
  std::vector<double> d(n);
  d[0] = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) * inv2h;
  d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) * inv2h;
  return d;
}

double trapezoid(std::span<const double> f, double h) {
  if (f.size() < 2) return 0.0;
  double s = 0.5 * (f.front() + f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
  return s * h;
}

std::vector<double> radial_weights(const RadialGrid& grid, Dimension dim) {
  const std::size_t n = grid.size();
  const double c = dim.sphere_area() * grid.dr();
  const int p = dim.value() - 1;
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = c * std::pow(grid.node(i), p);
  w[0] *= 0.5;
  w[n - 1] *= 0.5;
  return w;
}

double radial_integral(const RadialGrid& grid, std::span<const double> f, Dimension dim) {
  const int p = dim.value() - 1;
  double s = 0.0;
  const std::size_t n = grid.size();
  for (std::size_t i = 1; i + 1 < n; ++i) s += f[i] * std::pow(grid.node(i), p);
  s += 0.5 * f[n - 1] * std::pow(grid.node(n - 1), p);
  return dim.sphere_area() * grid.dr() * s;
}

EnergyBreakdown energy(const RadialState& state, Dimension dim) {
  state.validate();
  const auto& grid = state.grid;
  const auto w = radial_weights(grid, dim);
  const auto ur = radial_derivative(grid, state.u);
  double kin = 0.0, grad = 0.0, pot = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    kin += w[i] * state.v[i] * state.v[i];
    grad += w[i] * ur[i] * ur[i];
    pot += w[i] * dim.critical_power(state.u[i]);
  }
  EnergyBreakdown e;
  e.kinetic = 0.5 * kin;
  e.gradient = 0.5 * grad;
  e.potential = dim.potential_coefficient() * pot;
  e.total = e.kinetic + e.gradient - e.potential;
  return e;
}

double linear_energy(const RadialState& state, Dimension dim) {
  const auto e = energy(state, dim);
  return e.kinetic + e.gradient;
}

SobolevNorms sobolev_norms(const RadialState& state, Dimension dim) {
  state.validate();
  const auto& grid = state.grid;
  const auto w = radial_weights(grid, dim);
  const auto ur = radial_derivative(grid, state.u);
  double grad = 0.0, vel = 0.0, crit = 0.0, hardy = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grad += w[i] * ur[i] * ur[i];
    vel += w[i] * state.v[i] * state.v[i];
    crit += w[i] * dim.critical_power(state.u[i]);
  }
  // u^2 r^{N-3}: at the origin this is u(0)^2 for N = 3 and 0 otherwise.
  const int p = dim.value() - 3;
  const std::size_t n = grid.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double wi = (i == 0 || i + 1 == n) ? 0.5 : 1.0;
    hardy += wi * state.u[i] * state.u[i] * std::pow(grid.node(i), p);
  }
  hardy *= dim.sphere_area() * grid.dr();
  SobolevNorms s;
  s.gradient = std::sqrt(grad);
  s.velocity = std::sqrt(vel);
  s.critical = std::pow(crit, 1.0 / dim.critical_exponent());
  s.hardy = std::sqrt(hardy);
  return s;
}

}  // namespace wavecone
