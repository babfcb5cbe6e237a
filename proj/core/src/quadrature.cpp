#include "wavecone/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wavecone/error.hpp"

namespace wavecone {

RegionSpec RegionSpec::exterior_cone(double A) {
  RegionSpec r;
  r.kind = Kind::exterior_cone;
  r.A = A;
  return r;
}

RegionSpec RegionSpec::slab(double t0, double t1) {
  RegionSpec r;
  r.kind = Kind::slab;
  r.t0 = t0;
  r.t1 = t1;
  return r;
}

RegionSpec RegionSpec::ball(double radius, double center) {
  RegionSpec r;
  r.kind = Kind::ball;
  r.radius = radius;
  r.center = center;
  return r;
}

RegionSpec& RegionSpec::during(double from, double to) {
  t0 = from;
  t1 = to;
  return *this;
}

void RegionSpec::validate() const {
  if (kind == Kind::slab && !(t0 < t1)) throw ConfigError("slab requires t0 < t1");
  if (kind == Kind::ball && !(radius > 0.0)) throw ConfigError("ball window requires radius > 0");
  if (std::isnan(t0) || std::isnan(t1) || std::isnan(A) || std::isnan(center)) {
    throw ConfigError("region parameters must not be NaN");
  }
}

std::pair<double, double> RegionSpec::radial_extent(double t, double r_max) const {
  switch (kind) {
    case Kind::exterior_cone:
      return {std::max(0.0, A + t), r_max};
    case Kind::ball:
      return {std::max(0.0, std::abs(center) - radius), std::min(r_max, std::abs(center) + radius)};
    default:
      return {0.0, r_max};
  }
}

namespace {

// Normalised measure of the cap {angle to e1 <= theta} on S^{N-1}, given cos(theta).
double cap_fraction(double c, Dimension dim) {
  c = std::clamp(c, -1.0, 1.0);
  switch (dim.value()) {
    case 3:
      return 0.5 * (1.0 - c);
    case 4: {
      const double th = std::acos(c);
      return (th - std::sin(th) * c) / std::numbers::pi;
    }
    default:
      return (2.0 - 3.0 * c + c * c * c) / 4.0;
  }
}

}  // namespace

double RegionSpec::sphere_fraction(double r, double t, Dimension dim) const {
  (void)t;
  if (kind != Kind::ball) return 1.0;
  const double c = std::abs(center);
  if (c == 0.0 || r == 0.0) return (std::hypot(r, c) <= radius) ? 1.0 : 0.0;
  // |x - c e1|^2 <= radius^2  <=>  cos(angle) >= (r^2 + c^2 - radius^2) / (2 r c)
  const double cmin = (r * r + c * c - radius * radius) / (2.0 * r * c);
  if (cmin <= -1.0) return 1.0;
  if (cmin >= 1.0) return 0.0;
  return cap_fraction(cmin, dim);
}

double integrate_interval(const RadialGrid& grid, std::span<const double> g, double lo, double hi) {
  lo = std::max(lo, 0.0);
  hi = std::min(hi, grid.r_max());
  if (!(hi > lo)) return 0.0;
  const double h = grid.dr();
  const std::size_t n = grid.size();
  auto value_at = [&](double r) { return grid.interpolate(g, r); };
  std::size_t i0 = static_cast<std::size_t>(std::ceil(lo / h - 1e-12));
  std::size_t i1 = static_cast<std::size_t>(std::floor(hi / h + 1e-12));
  i1 = std::min(i1, n - 1);
  if (i0 > i1) {
    // both ends inside one cell
    return 0.5 * (value_at(lo) + value_at(hi)) * (hi - lo);
  }
  double s = 0.0;
  const double r0 = grid.node(i0), r1 = grid.node(i1);
  if (r0 > lo) s += 0.5 * (value_at(lo) + g[i0]) * (r0 - lo);
  if (hi > r1) s += 0.5 * (g[i1] + value_at(hi)) * (hi - r1);
  if (i1 > i0) {
    double inner = 0.5 * (g[i0] + g[i1]);
    for (std::size_t i = i0 + 1; i < i1; ++i) inner += g[i];
    s += inner * h;
  }
  return s;
}

double integrate_slice(const RadialGrid& grid, std::span<const double> f, double t,
                       const RegionSpec& region, const RadialMeasure& measure) {
  const auto [lo, hi] = region.radial_extent(t, grid.r_max());
  if (!(hi > lo)) return 0.0;
  const std::size_t n = grid.size();
  std::vector<double> g(n, 0.0);
  // Only the nodes bracketing [lo, hi] are needed.
  const std::size_t a = grid.floor_index(lo);
  const std::size_t b = std::min(n - 1, grid.floor_index(hi) + 1);
  const int p = measure.dim ? measure.dim->value() - 1 : 0;
  const double area = measure.dim ? measure.dim->sphere_area() : 1.0;
  for (std::size_t i = a; i <= b; ++i) {
    const double r = grid.node(i);
    double gi = f[i];
    if (measure.dim) {
      gi *= area * std::pow(r, p) * region.sphere_fraction(r, t, *measure.dim);
    }
    g[i] = gi;
  }
  return integrate_interval(grid, g, lo, hi);
}

double integrate_time_series(std::span<const double> times, std::span<const double> values,
                             double t_lo, double t_hi) {
  if (times.size() < 2) return 0.0;
  t_lo = std::max(t_lo, times.front());
  t_hi = std::min(t_hi, times.back());
  if (!(t_hi > t_lo)) return 0.0;
  auto at = [&](double t) {
    auto it = std::upper_bound(times.begin(), times.end(), t);
    if (it == times.begin()) return values.front();
    if (it == times.end()) return values.back();
    const std::size_t j = static_cast<std::size_t>(it - times.begin());
    const double s = (t - times[j - 1]) / (times[j] - times[j - 1]);
    return (1.0 - s) * values[j - 1] + s * values[j];
  };
  double s = 0.0;
  double prev_t = t_lo, prev_v = at(t_lo);
  for (std::size_t j = 0; j < times.size(); ++j) {
    if (times[j] <= t_lo) continue;
    if (times[j] >= t_hi) break;
    s += 0.5 * (prev_v + values[j]) * (times[j] - prev_t);
    prev_t = times[j];
    prev_v = values[j];
  }
  s += 0.5 * (prev_v + at(t_hi)) * (t_hi - prev_t);
  return s;
}

double quadrature_region(const SpaceTimeSamples& f, const RegionSpec& region,
                         const RadialMeasure& measure) {
  region.validate();
  if (f.values.size() != f.times.size() * f.grid.size()) {
    throw InvalidState("space-time samples do not match times x grid");
  }
  std::vector<double> slices(f.times.size());
  for (std::size_t j = 0; j < f.times.size(); ++j) {
    slices[j] = integrate_slice(f.grid, f.row(j), f.times[j], region, measure);
  }
  return integrate_time_series(f.times, slices, region.t0, region.t1);
}

AngularRule gauss_legendre(std::size_t n) {
  AngularRule rule;
  rule.mu.resize(n);
  rule.weight.resize(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.mu[i] = x;
    rule.mu[n - 1 - i] = -x;
    rule.weight[i] = w;
    rule.weight[n - 1 - i] = w;
  }
  return rule;
}

AngularRule angular_rule(Dimension dim, std::size_t n) {
  if (dim.value() == 4) {
    // Gauss-Chebyshev of the second kind: weight sqrt(1 - mu^2).
    AngularRule rule;
    rule.mu.resize(n);
    rule.weight.resize(n);
    const double step = std::numbers::pi / (static_cast<double>(n) + 1.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double th = step * static_cast<double>(j + 1);
      rule.mu[j] = std::cos(th);
      const double s = std::sin(th);
      rule.weight[j] = step * s * s;
    }
    return rule;
  }
  auto rule = gauss_legendre(n);
  if (dim.value() == 5) {
    for (std::size_t j = 0; j < n; ++j) rule.weight[j] *= 1.0 - rule.mu[j] * rule.mu[j];
  }
  return rule;
}

}  // namespace wavecone
