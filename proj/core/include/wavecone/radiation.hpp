#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "wavecone/dimension.hpp"
#include "wavecone/linear.hpp"
#include "wavecone/state.hpp"

namespace wavecone {

/// Radial radiation field G(eta) sampled on a uniform eta grid, optionally
/// with its primitive g.
///
/// Sign conventions: G = 1/2 (d_t - d_r)(r^{(N-1)/2} v) along r = T + eta, and
/// the primitive is g(eta) = int_eta^{eta_max} G(s) ds, so d_eta g = -G and
/// r^{(N-1)/2} v(T, T + eta) -> g(eta) as T grows. L^2 norms carry the
/// |S^{N-1}| factor, so norm_squared() is directly comparable with E_L.
struct RadiationProfile {
  Dimension dim{3};
  double eta_min = 0.0;
  double d_eta = 0.0;
  std::vector<double> G;
  std::vector<double> g;  // empty when no primitive is attached

  std::size_t size() const noexcept { return G.size(); }
  double eta(std::size_t i) const noexcept { return eta_min + static_cast<double>(i) * d_eta; }
  double eta_max() const noexcept { return eta(size() - 1); }
  bool has_primitive() const noexcept { return !g.empty(); }

  /// |S^{N-1}| int G^2 deta
  double norm_squared() const;
  /// |S^{N-1}| int (d_eta g)^2 deta with d_eta g by centered differences.
  double primitive_gradient_norm_squared() const;

  /// Computes g from G by cumulative trapezoid from the right end.
  void attach_primitive();

  /// Linear interpolation; zero outside [eta_min, eta_max].
  double G_at(double e) const noexcept;
  double g_at(double e) const noexcept;

  /// Throws InvalidState on malformed samples or a primitive whose discrete
  /// derivative does not match -G.
  void validate() const;
};

/// Profile with Gaussian primitive g(eta) = amplitude * exp(-(eta - center)^2 / (2 width^2))
/// on [eta_min, eta_max]; G = -g' is sampled exactly and g is then attached
/// by the trapezoid rule, so the pair is consistent.
RadiationProfile gaussian_profile(Dimension dim, double center, double width, double eta_min,
                                  double eta_max, double d_eta, double amplitude = 1.0);

/// Radiation profile of a state, read along r = state.t + eta. `d_eta` <= 0
/// selects the state's grid spacing.
RadiationProfile radiation_from_state(const RadialState& state, Dimension dim, double eta_min,
                                      double eta_max, double d_eta = 0.0);

/// G_+ of a free wave observed at time T over [eta_min, eta_max], with the
/// primitive attached.
RadiationProfile extract_radiation(const LinearEvolution& ev, double T, double eta_min,
                                   double eta_max);

/// || 1/2 (d_t + d_r)(r^{(N-1)/2} v)(T, T + eta) ||_{L^2(eta)}; tends to 0 as T grows.
double incoming_residual(const LinearEvolution& ev, double T, double eta_min, double eta_max);

struct InverseOptions {
  /// Radial spacing of the reconstruction; <= 0 selects the profile's d_eta.
  double dr = 0.0;
  /// Time at which the outgoing ansatz is imposed; NaN selects
  /// eta_max + 4 * support radius.
  double T_far = std::numeric_limits<double>::quiet_NaN();
  double cfl = kDefaultCfl;
  /// Relative amplitude below which profile samples count as zero.
  double support_tolerance = 1e-10;
};

/// Cauchy data at t = 0 of the free wave whose primitive radiation profile
/// is `profile.g`: v = r^{-(N-1)/2} g(r - t) + eps at large t, where eps
/// solves (d_t^2 - Delta) eps = -c_N g(r - t) / r^{(N+3)/2} backward from
/// eps(T_far) = 0, then the free flow back to t = 0.
RadialState inverse_radiation(const RadiationProfile& profile, const InverseOptions& options = {});

/// F(rho, sigma) with v(t, r) = r^{-1} F(r - t, 1/r) for an exact N = 3
/// evolution. sigma = 0 is obtained by linear extrapolation from the three
/// samples sigma_min, 2 sigma_min, 3 sigma_min.
double conformal_profile(const LinearEvolution& ev, double rho, double sigma);

struct InteriorSample {
  double t = 0.0;
  double hardy = 0.0;            // int u^2 / |x|^2 dx
  double interior_energy = 0.0;  // int_{|x| <= t - R} |grad_{t,x} u|^2 dx
};

std::vector<InteriorSample> vanishing_interior_check(const LinearEvolution& ev, double R,
                                                     std::span<const double> times);

struct ChannelSample {
  double t = 0.0;
  double exterior = 0.0;  // int_{|x| >= t} |grad_{t,x} v|^2 dx
  double fraction = 0.0;  // exterior / int (|grad v0|^2 + v1^2)
};

/// Exterior energy of an N = 3 free wave with data (v0, 0) or (0, v1).
std::vector<ChannelSample> channels_exterior_energy(const RadialState& data,
                                                    std::span<const double> times);

}  // namespace wavecone
