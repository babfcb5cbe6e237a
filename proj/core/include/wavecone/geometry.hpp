#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace wavecone {

/// Truncated-cone parameters: tau >= 0, 0 < theta < pi/2, shell thickness ell > 0.
struct ConeParams {
  double tau = 0.0;
  double theta = 0.1;
  double ell = 1.0;

  /// Throws ConfigError on parameters outside their ranges.
  void validate() const;
};

/// Angle between x and e1 in [0, pi]; 0 for x = 0.
double angle_to_e1(std::span<const double> x);

/// x in Gamma_theta: x = 0 or angle(e1, x) >= pi/2 + theta.
bool in_gamma(std::span<const double> x, double theta);

/// Euclidean distance from x to Gamma_theta, in closed form.
double dist_gamma(std::span<const double> x, double theta);

/// dist_gamma(x, theta) > tau.
bool in_D(std::span<const double> x, double tau, double theta);

/// Brute-force distance to Gamma_theta in R^3 (the set is rotation invariant
/// about e1, so three dimensions suffice): minimum over a dense sample of the
/// cone's boundary surface and the apex.
double dist_gamma_sampled(std::span<const double> x, double theta, std::size_t n_radial,
                          std::size_t n_azimuth, double r_max);

struct PropertyReport {
  std::size_t checked = 0;
  std::size_t violations = 0;
  /// Smallest margin by which the property held (negative if violated).
  double min_slack = 0.0;

  bool ok() const noexcept { return violations == 0; }
};

struct ConeReport {
  PropertyReport small_ball;   // |x| <= tau  =>  x not in D
  PropertyReport wide_angle;   // |x| > tau, angle(x, e1) < theta  =>  x in D
  PropertyReport shell_angle;  // x in D, |x| <= tau + ell  =>  angle <= theta + sqrt(ell / (tau + ell))
  // Same hypothesis with the bound theta + 2 sqrt(ell / (tau + ell)). The
  // tangent-line argument only gives eps^2 / 4 <= ell / (tau + ell), so this is
  // the estimate that actually follows; the one above fails for moderate ell.
  PropertyReport shell_angle_2x;
};

/// Checks the three elementary properties of D_{tau,theta} on `samples`
/// points drawn uniformly from the ball of radius tau + ell in R^N
/// (rejection sampling), deterministic for a given seed.
ConeReport cone_property_check(const ConeParams& params, std::size_t samples, int dim,
                                 std::uint64_t seed = 42);

/// 1 - cos s >= s^2 / 4 on n equally spaced points of [0, pi/2].
PropertyReport cos_inequality_check(std::size_t n);

/// Uniform doubles in [0, 1) built from the raw 64-bit Mersenne Twister
/// output, so sequences are identical across standard libraries.
class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace wavecone
