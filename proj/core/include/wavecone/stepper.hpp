#pragma once

#include <functional>
#include <span>
#include <vector>

#include "wavecone/dimension.hpp"
#include "wavecone/grid.hpp"

namespace wavecone {

/// Adds a forcing term f(t, u) to `out` (which arrives zeroed).
using Forcing = std::function<void(double t, std::span<const double> u, std::span<double> out)>;

/// Kick-drift-kick leapfrog for u_tt = Delta_r u + f on a radial grid.
///
/// The radial Laplacian is the conservative finite-volume form
///   (Delta u)_i = [r_{i+1/2}^{N-1}(u_{i+1}-u_i) - r_{i-1/2}^{N-1}(u_i-u_{i-1})] / (V_i dr^2)
/// with V_i = (r_{i+1/2}^N - r_{i-1/2}^N) / (N dr), so Delta u(0) = 2N (u_1 - u_0) / dr^2.
/// The outermost node is held at its initial value.
class LeapfrogStepper {
 public:
  LeapfrogStepper(const RadialGrid& grid, Dimension dim);

  /// Largest dt/dr for which the scheme is stable in this dimension.
  static double max_stable_cfl(Dimension dim) noexcept;

  void laplacian(std::span<const double> u, std::span<double> out) const;

  /// Acceleration Delta u + f(t, u), zero at the outer node.
  void acceleration(double t, std::span<const double> u, std::span<double> accel,
                    const Forcing& forcing) const;

  /// Advances (u, v) from t to t + h. `accel` must hold the acceleration at t
  /// on entry and holds the acceleration at t + h on exit.
  void step(std::span<double> u, std::span<double> v, std::span<double> accel, double t, double h,
            const Forcing& forcing) const;

  const RadialGrid& grid() const noexcept { return grid_; }

 private:
  RadialGrid grid_;
  Dimension dim_;
  std::vector<double> lower_;  // coefficient of u_{i-1}
  std::vector<double> upper_;  // coefficient of u_{i+1}
  mutable std::vector<double> scratch_;
};

/// Number of equal steps of size at most cfl*dr covering |t|.
std::size_t step_count(double t, double dr, double cfl) noexcept;

}  // namespace wavecone
