#include "wavecone/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wavecone/error.hpp"

namespace wavecone {

using std::numbers::pi;

void ConeParams::validate() const {
  if (!(theta > 0.0 && theta < 0.5 * pi)) throw ConfigError("theta must lie in (0, pi/2)");
  if (!(tau >= 0.0)) throw ConfigError("tau must be >= 0");
  if (!(ell > 0.0)) throw ConfigError("ell must be > 0");
}

namespace {

double norm(std::span<const double> x) {
  double s = 0.0;
  for (double c : x) s += c * c;
  return std::sqrt(s);
}

}  // namespace

double angle_to_e1(std::span<const double> x) {
  const double r = norm(x);
  if (r == 0.0 || x.empty()) return 0.0;
  return std::acos(std::clamp(x[0] / r, -1.0, 1.0));
}

bool in_gamma(std::span<const double> x, double theta) {
  if (norm(x) == 0.0) return true;
  return angle_to_e1(x) >= 0.5 * pi + theta;
}

double dist_gamma(std::span<const double> x, double theta) {
  const double r = norm(x);
  if (r == 0.0) return 0.0;
  const double beta = pi - angle_to_e1(x);  // angle to -e1
  const double opening = 0.5 * pi - theta;
  if (beta <= opening) return 0.0;
  if (beta - opening <= 0.5 * pi) return r * std::sin(beta - opening);
  return r;
}

bool in_D(std::span<const double> x, double tau, double theta) {
  return dist_gamma(x, theta) > tau;
}

double dist_gamma_sampled(std::span<const double> x, double theta, std::size_t n_radial,
                          std::size_t n_azimuth, double r_max) {
  if (in_gamma(x, theta)) return 0.0;
  // Reduce to R^3 by rotating the transverse part onto e2.
  double perp = 0.0;
  for (std::size_t j = 1; j < x.size(); ++j) perp += x[j] * x[j];
  const double p[3] = {x.empty() ? 0.0 : x[0], std::sqrt(perp), 0.0};
  double best = std::sqrt(p[0] * p[0] + p[1] * p[1]);  // apex
  const double st = std::sin(theta), ct = std::cos(theta);
  for (std::size_t a = 0; a < n_azimuth; ++a) {
    const double phi = 2.0 * pi * static_cast<double>(a) / static_cast<double>(n_azimuth);
    const double dir[3] = {-st, ct * std::cos(phi), ct * std::sin(phi)};
    for (std::size_t k = 1; k <= n_radial; ++k) {
      const double s = r_max * static_cast<double>(k) / static_cast<double>(n_radial);
      const double d0 = p[0] - s * dir[0], d1 = p[1] - s * dir[1], d2 = p[2] - s * dir[2];
      best = std::min(best, std::sqrt(d0 * d0 + d1 * d1 + d2 * d2));
    }
  }
  return best;
}

namespace {

void record(PropertyReport& rep, double slack) {
  if (rep.checked == 0 || slack < rep.min_slack) rep.min_slack = slack;
  ++rep.checked;
  if (slack < 0.0) ++rep.violations;
}

}  // namespace

ConeReport cone_property_check(const ConeParams& params, std::size_t samples, int dim,
                                 std::uint64_t seed) {
  params.validate();
  if (dim < 2) throw ConfigError("lemma check needs dimension >= 2");
  const double tau = params.tau, theta = params.theta;
  const double R = tau + params.ell;
  const double bound = theta + std::sqrt(params.ell / R);
  const double bound_2x = theta + 2.0 * std::sqrt(params.ell / R);

  UniformSource rng(seed);
  std::vector<double> x(static_cast<std::size_t>(dim));
  ConeReport rep;
  for (std::size_t n = 0; n < samples;) {
    double r2 = 0.0;
    for (double& c : x) {
      c = R * (2.0 * rng.next() - 1.0);
      r2 += c * c;
    }
    if (r2 > R * R) continue;
    ++n;
    const double r = std::sqrt(r2);
    const double d = dist_gamma(x, theta);
    const double angle = angle_to_e1(x);
    if (r <= tau) record(rep.small_ball, tau - d);
    if (r > tau && angle < theta) record(rep.wide_angle, d - tau);
    if (d > tau) {
      record(rep.shell_angle, bound - angle);
      record(rep.shell_angle_2x, bound_2x - angle);
    }
  }
  return rep;
}

PropertyReport cos_inequality_check(std::size_t n) {
  if (n < 2) throw ConfigError("cosine check needs at least two points");
  PropertyReport rep;
  for (std::size_t k = 0; k < n; ++k) {
    const double s = 0.5 * pi * static_cast<double>(k) / static_cast<double>(n - 1);
    const double h = std::sin(0.5 * s);
    record(rep, 2.0 * h * h - 0.25 * s * s);
  }
  return rep;
}

}  // namespace wavecone
