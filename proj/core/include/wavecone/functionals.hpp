#pragma once

#include <string>
#include <vector>

#include "wavecone/dimension.hpp"
#include "wavecone/nonlinear.hpp"
#include "wavecone/quadrature.hpp"
#include "wavecone/state.hpp"

namespace wavecone {

/// (int (int_{Omega_t} |u|^{2(N+2)/(N-2)} dx)^{1/2} dt)^{(N-2)/(N+2)} over the
/// snapshots of a trajectory. Finite time bounds of the region must lie in
/// the trajectory's range.
double strichartz_norm(const Trajectory& traj, const RegionSpec& region);

/// e1-norm of radial (f, g): sqrt(||g||^2 + ||grad f||^2); the cross term
/// vanishes by symmetry.
double e1_norm(const RadialState& state, Dimension dim);

/// The same norm by term-by-term (r, mu) quadrature of
/// ||g + d_1 f||^2 + sum_{j >= 2} ||d_j f||^2.
double e1_norm_axisymmetric(const RadialState& state, Dimension dim, std::size_t n_mu = 128);

/// Localization phi_alpha(y) = phi(|y| / alpha): smooth, 1 for |y| <= alpha/4,
/// 0 for |y| >= alpha/2.
double cutoff(double rho, double alpha);
double cutoff_derivative(double rho, double alpha);

/// The five localized differentiation identities, each d/dt F = R(t), with
/// the cutoff terms kept exactly.
inline const std::vector<std::string>& virial_identities() {
  static const std::vector<std::string> names = {"u_ut", "dilation", "energy_moment", "momentum",
                                                 "energy"};
  return names;
}

struct VirialRow {
  double t = 0.0;
  std::string identity;
  double lhs = 0.0;  // centered difference of F over snapshots
  double rhs = 0.0;
  double residual = 0.0;
};

struct VirialReport {
  double alpha = 1.0;
  double center = 0.0;  // window centred at center * e1
  std::vector<double> times;
  // Localized quantities at every snapshot:
  // a = int u_t^2 phi, b = int |grad u|^2 phi, c = int |u|^{2N/(N-2)} phi,
  // d = int d_1 u u_t phi.
  std::vector<double> a, b, c, d;
  std::vector<VirialRow> rows;

  /// max |residual| over the rows of one identity.
  double max_residual(const std::string& identity) const;
};

/// Exact-remainder virial identities on a trajectory, window phi_alpha(x - c e1).
/// Radial (c = 0) inputs use the one-dimensional reduction; otherwise (r, mu)
/// quadrature with r on the grid nodes.
VirialReport virial_report(const Trajectory& traj, double alpha, double center,
                           std::size_t n_mu = 128);

struct PohozaevCheck {
  double gradient = 0.0;   // int |grad W|^2 phi
  double potential = 0.0;  // int W^{2N/(N-2)} phi
  double boundary = 0.0;   // -int W grad W . grad phi
  /// |gradient - potential - boundary| / gradient
  double relative_residual = 0.0;
};

/// Localized Pohozaev-type identity for the static ground state, by
/// Gauss-Legendre quadrature of the closed forms.
PohozaevCheck localized_pohozaev_check(Dimension dim, double alpha, double center = 0.0);

}  // namespace wavecone
