#pragma once

#include <span>
#include <vector>

#include "wavecone/dimension.hpp"
#include "wavecone/grid.hpp"
#include "wavecone/state.hpp"

namespace wavecone {

struct EnergyBreakdown {
  double kinetic = 0.0;    // 1/2 int (d_t u)^2
  double gradient = 0.0;   // 1/2 int |grad u|^2
  double potential = 0.0;  // (N-2)/(2N) int |u|^{2N/(N-2)}
  double total = 0.0;      // kinetic + gradient - potential
};

struct SobolevNorms {
  double gradient = 0.0;  // ||grad u||_{L^2}
  double velocity = 0.0;  // ||d_t u||_{L^2}
  double critical = 0.0;  // ||u||_{L^{2N/(N-2)}}
  double hardy = 0.0;     // ||u / r||_{L^2}
};

/// d_r f: centered differences inside, second-order one-sided at r_max,
/// and 0 at the origin.
std::vector<double> radial_derivative(const RadialGrid& grid, std::span<const double> f);

/// Composite trapezoid rule with spacing h.
double trapezoid(std::span<const double> f, double h);

/// int_{R^N} f(|x|) dx = |S^{N-1}| int_0^{r_max} f(r) r^{N-1} dr, trapezoid in r.
double radial_integral(const RadialGrid& grid, std::span<const double> f, Dimension dim);

/// Node weights w_i such that radial_integral(f) = sum_i w_i f_i.
std::vector<double> radial_weights(const RadialGrid& grid, Dimension dim);

EnergyBreakdown energy(const RadialState& state, Dimension dim);

/// Free-wave energy E_L = 1/2 int |grad u|^2 + (d_t u)^2.
double linear_energy(const RadialState& state, Dimension dim);

SobolevNorms sobolev_norms(const RadialState& state, Dimension dim);

}  // namespace wavecone
