#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "wavecone/dimension.hpp"
#include "wavecone/grid.hpp"

namespace wavecone {

/// Space-time region descriptor. Every kind may additionally be restricted
/// to a time window [t0, t1].
struct RegionSpec {
  enum class Kind { full, exterior_cone, slab, ball };

  Kind kind = Kind::full;
  double A = 0.0;  // exterior cone {r >= A + t}
  double t0 = -std::numeric_limits<double>::infinity();
  double t1 = std::numeric_limits<double>::infinity();
  double center = 0.0;  // ball centred at center * e1
  double radius = 0.0;

  static RegionSpec full() { return {}; }
  static RegionSpec exterior_cone(double A);
  static RegionSpec slab(double t0, double t1);
  static RegionSpec ball(double radius, double center = 0.0);

  RegionSpec& during(double from, double to);

  /// Throws ConfigError on an inconsistent descriptor.
  void validate() const;

  /// Radial interval [lo, hi] that can intersect the region at time t.
  std::pair<double, double> radial_extent(double t, double r_max) const;

  /// Fraction of the sphere |x| = r lying in the region at time t.
  double sphere_fraction(double r, double t, Dimension dim) const;
};

/// Weight applied to the radial integrand.
struct RadialMeasure {
  /// nullopt: plain dr; otherwise |S^{N-1}| r^{N-1} dr.
  std::optional<Dimension> dim;

  static RadialMeasure plain() { return {}; }
  static RadialMeasure volume(Dimension d) { return {d}; }
};

/// Samples f(t_j, r_i) on a time sequence times a radial grid, row-major in t.
struct SpaceTimeSamples {
  RadialGrid grid;
  std::vector<double> times;
  std::vector<double> values;

  std::span<const double> row(std::size_t j) const {
    return {values.data() + j * grid.size(), grid.size()};
  }
};

/// Integral of the piecewise-linear interpolant of node samples g over
/// [lo, hi] (clipped to the grid); partial end cells are integrated exactly.
double integrate_interval(const RadialGrid& grid, std::span<const double> g, double lo, double hi);

/// Spatial integral over the region's slice at time t.
double integrate_slice(const RadialGrid& grid, std::span<const double> f, double t,
                       const RegionSpec& region, const RadialMeasure& measure);

/// Trapezoid-in-r, trapezoid-in-t integral of f restricted to the region.
/// Empty regions integrate to 0.
double quadrature_region(const SpaceTimeSamples& f, const RegionSpec& region,
                         const RadialMeasure& measure);

/// Integral over [t_lo, t_hi] of the piecewise-linear interpolant through
/// (times[j], values[j]).
double integrate_time_series(std::span<const double> times, std::span<const double> values,
                             double t_lo, double t_hi);

/// Nodes and weights approximating int_{-1}^{1} f(mu) (1 - mu^2)^{(N-3)/2} dmu,
/// exact for polynomials of degree < 2n.
struct AngularRule {
  std::vector<double> mu;
  std::vector<double> weight;
};
AngularRule angular_rule(Dimension dim, std::size_t n);

/// Gauss-Legendre nodes and weights on [-1, 1].
AngularRule gauss_legendre(std::size_t n);

}  // namespace wavecone
