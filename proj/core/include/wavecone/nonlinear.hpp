#pragma once

#include <span>
#include <vector>

#include "wavecone/dimension.hpp"
#include "wavecone/linear.hpp"
#include "wavecone/radiation.hpp"
#include "wavecone/state.hpp"

namespace wavecone {

struct SchemeOptions {
  double cfl = kDefaultCfl;
  /// A run stops with BlowUp once max |u| exceeds this value.
  double blowup_threshold = 1e6;
  /// Snapshots are stored every `snapshot_stride` nominal steps.
  std::size_t snapshot_stride = 16;
  /// Off: the same scheme without the |u|^{4/(N-2)} u forcing.
  bool nonlinear = true;
  BoundaryPolicy boundary = BoundaryPolicy::causal;
  /// Substeps keep h * max|u|^{(p-1)/2} below this bound, which resolves the
  /// blow-up time instead of overshooting it. Zero disables the limiter.
  double rate_limit = 0.1;
};

enum class RunStatus { global, blowup };

/// Snapshots of a nonlinear run together with how it ended.
struct Trajectory {
  Dimension dim{3};
  SchemeOptions scheme;
  std::vector<RadialState> snapshots;
  RunStatus status = RunStatus::global;
  /// T for a Global run, the first time max|u| crossed the threshold otherwise.
  double t_end = 0.0;

  const RadialGrid& grid() const { return snapshots.front().grid; }
  double t_begin() const { return snapshots.front().t; }
  double t_last() const { return snapshots.back().t; }

  /// State at time t by linear interpolation between snapshots.
  RadialState at(double t) const;

  /// u(t) by cubic Hermite interpolation in time (uses u_t), written into out.
  void hermite_u(double t, std::span<double> out) const;

  std::vector<double> times() const;
  std::vector<double> energy_series() const;
};

/// Evolves u_tt - Delta u = |u|^{4/(N-2)} u from `data` over [data.t, data.t + T].
Trajectory evolve_nonlinear(const RadialState& data, double T, Dimension dim,
                            const SchemeOptions& options = {});

struct ScatteringPart {
  /// Cauchy data at t = 0 of the linear wave v_L.
  RadialState data;
  double A = 0.0;
  /// Radiation field of the exterior-source solution, cut below eta = A.
  RadiationProfile profile;
  /// E_L of `data`.
  double energy = 0.0;
};

/// Linear part of a global trajectory outside the cone {r > t + A}.
///
/// Solves (d_t^2 - Delta) v = 1_{r > t + A} |u|^{4/(N-2)} u with the
/// trajectory's data, reads its radiation field at the final time over
/// eta > A, tapers it smoothly to zero below A and near the outer edge, and
/// inverts it.
ScatteringPart extract_scattering_part(const Trajectory& traj, double A);

/// Exterior defect at time t:
///   int_{r >= t + A} |grad(u - v_L)|^2 + (d_t(u - v_L))^2 + u^2 / r^2 + |u|^{2N/(N-2)} dx.
double exterior_defect(const Trajectory& traj, const ScatteringPart& scat, double A, double t);

/// The same functional at several increasing times, propagating v_L once.
std::vector<double> exterior_defect_series(const Trajectory& traj, const ScatteringPart& scat,
                                           double A, std::span<const double> times);

}  // namespace wavecone
