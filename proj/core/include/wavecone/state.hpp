#pragma once

#include <functional>
#include <vector>

#include "wavecone/grid.hpp"

namespace wavecone {

/// Relative amplitude below which a sample counts as zero when measuring the
/// support of a state.
inline constexpr double kSupportTolerance = 1e-14;

/// (u, d_t u) sampled on a radial grid at time t.
struct RadialState {
  RadialGrid grid;
  double t = 0.0;
  std::vector<double> u;
  std::vector<double> v;

  static RadialState zero(const RadialGrid& grid, double t = 0.0);
  static RadialState from_functions(const RadialGrid& grid,
                                    const std::function<double(double)>& u0,
                                    const std::function<double(double)>& u1, double t = 0.0);

  /// Throws InvalidState unless u, v match the grid and are finite.
  void validate() const;

  /// Largest node radius where |u| or |v| exceeds rel_tol times the
  /// state's sup norm; 0 for the zero state.
  double support_radius(double rel_tol = kSupportTolerance) const;

  /// max_i |u_i|
  double sup_norm() const noexcept;
};

/// Linear interpolation of a state onto another grid; zero outside the
/// source grid.
RadialState resample(const RadialState& state, const RadialGrid& grid);

/// a * x + b * y, node-wise; grids and times must agree.
RadialState combine(double a, const RadialState& x, double b, const RadialState& y);

}  // namespace wavecone
