#include "wavecone/nonlinear.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "smooth.hpp"
#include "wavecone/energy.hpp"
#include "wavecone/error.hpp"
#include "wavecone/quadrature.hpp"
#include "wavecone/stepper.hpp"

namespace wavecone {

namespace {

// Index j with snapshots[j].t <= t <= snapshots[j + 1].t.
std::size_t bracket(const std::vector<RadialState>& snaps, double t) {
  const double tol = 1e-12 * std::max(1.0, std::abs(snaps.back().t));
  if (t < snaps.front().t - tol || t > snaps.back().t + tol) {
    std::ostringstream os;
    os << "time " << t << " outside the trajectory range [" << snaps.front().t << ", "
       << snaps.back().t << "]";
    throw RangeError(os.str());
  }
  if (snaps.size() == 1) return 0;
  auto it = std::upper_bound(snaps.begin(), snaps.end(), t,
                             [](double x, const RadialState& s) { return x < s.t; });
  auto j = static_cast<std::size_t>(it - snaps.begin());
  return std::clamp<std::size_t>(j, 1, snaps.size() - 1) - 1;
}

double sup_abs(std::span<const double> u) {
  double m = 0.0;
  for (double x : u) {
    if (!std::isfinite(x)) return std::numeric_limits<double>::infinity();
    m = std::max(m, std::abs(x));
  }
  return m;
}

}  // namespace

RadialState Trajectory::at(double t) const {
  if (snapshots.empty()) throw InvalidState("empty trajectory");
  const std::size_t j = bracket(snapshots, t);
  if (snapshots.size() == 1) return snapshots[0];
  const auto& a = snapshots[j];
  const auto& b = snapshots[j + 1];
  const double s = std::clamp((t - a.t) / (b.t - a.t), 0.0, 1.0);
  RadialState out = combine(1.0 - s, a, s, RadialState{b.grid, a.t, b.u, b.v});
  out.t = t;
  return out;
}

void Trajectory::hermite_u(double t, std::span<double> out) const {
  if (snapshots.empty()) throw InvalidState("empty trajectory");
  const std::size_t j = bracket(snapshots, t);
  if (snapshots.size() == 1) {
    std::copy(snapshots[0].u.begin(), snapshots[0].u.end(), out.begin());
    return;
  }
  const auto& a = snapshots[j];
  const auto& b = snapshots[j + 1];
  const double d = b.t - a.t;
  const double s = std::clamp((t - a.t) / d, 0.0, 1.0);
  const double s2 = s * s, s3 = s2 * s;
  const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
  const double h10 = (s3 - 2.0 * s2 + s) * d;
  const double h01 = -2.0 * s3 + 3.0 * s2;
  const double h11 = (s3 - s2) * d;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = h00 * a.u[i] + h10 * a.v[i] + h01 * b.u[i] + h11 * b.v[i];
  }
}

std::vector<double> Trajectory::times() const {
  std::vector<double> t(snapshots.size());
  for (std::size_t j = 0; j < t.size(); ++j) t[j] = snapshots[j].t;
  return t;
}

std::vector<double> Trajectory::energy_series() const {
  std::vector<double> e(snapshots.size());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = energy(snapshots[j], dim).total;
  return e;
}

Trajectory evolve_nonlinear(const RadialState& data, double T, Dimension dim,
                            const SchemeOptions& options) {
  data.validate();
  if (!(T >= 0.0) || !std::isfinite(T)) throw ConfigError("run length T must be >= 0");
  if (!(options.cfl > 0.0) || options.cfl > LeapfrogStepper::max_stable_cfl(dim)) {
    std::ostringstream os;
    os << "CFL ratio " << options.cfl << " exceeds the stable bound "
       << LeapfrogStepper::max_stable_cfl(dim) << " for N = " << dim.value();
    throw ConfigError(os.str());
  }
  if (options.snapshot_stride == 0) throw ConfigError("snapshot stride must be positive");
  if (!(options.blowup_threshold > 0.0)) throw ConfigError("blow-up threshold must be positive");
  if (options.boundary == BoundaryPolicy::causal) {
    check_causal_window(data, T, 2.0 * data.grid.dr());
  }

  Trajectory traj;
  traj.dim = dim;
  traj.scheme = options;
  traj.snapshots.push_back(data);
  traj.t_end = data.t + T;

  const LeapfrogStepper stepper(data.grid, dim);
  Forcing forcing;
  if (options.nonlinear) {
    forcing = [dim](double, std::span<const double> u, std::span<double> out) {
      for (std::size_t i = 0; i < u.size(); ++i) out[i] = dim.nonlinearity(u[i]);
    };
  }

  const std::size_t steps = step_count(T, data.grid.dr(), options.cfl);
  if (steps == 0) return traj;
  const double h = T / static_cast<double>(steps);
  const double half_power = 0.5 * (dim.power() - 1.0);

  RadialState s = data;
  RadialState prev = data;
  std::vector<double> accel(s.u.size());
  stepper.acceleration(s.t, s.u, accel, forcing);
  double sup = sup_abs(s.u);

  for (std::size_t k = 1; k <= steps; ++k) {
    const double target = data.t + h * static_cast<double>(k);
    while (s.t < target) {
      double hk = target - s.t;
      if (options.nonlinear && options.rate_limit > 0.0 && sup > 0.0) {
        hk = std::min(hk, options.rate_limit / std::pow(sup, half_power));
      }
      // Snap the last substep onto the nominal time.
      if (target - (s.t + hk) < 1e-12 * h) hk = target - s.t;
      prev.u.assign(s.u.begin(), s.u.end());
      prev.v.assign(s.v.begin(), s.v.end());
      prev.t = s.t;
      stepper.step(s.u, s.v, accel, s.t, hk, forcing);
      s.t = (hk == target - prev.t) ? target : s.t + hk;
      sup = sup_abs(s.u);
      if (!(sup <= options.blowup_threshold) || !std::isfinite(sup_abs(s.v))) {
        traj.status = RunStatus::blowup;
        traj.t_end = s.t;
        if (prev.t > traj.snapshots.back().t) traj.snapshots.push_back(prev);
        return traj;
      }
    }
    if (k % options.snapshot_stride == 0 || k == steps) traj.snapshots.push_back(s);
  }
  return traj;
}

namespace {

constexpr double kTaperLength = 1.0;

// Radiation profile of v restricted to eta > A, extended below A by a smooth
// taper of g to zero and, when the field does not vanish at the outer edge,
// tapered there as well. G is recomputed as -d_eta g so that the pair stays
// consistent and compactly supported.
RadiationProfile tapered_profile(const RadiationProfile& p) {
  const double de = p.d_eta;
  const auto pad = static_cast<std::size_t>(std::ceil(kTaperLength / de)) + 4;
  const std::size_t m = p.size();
  double scale = 0.0;
  for (std::size_t j = 0; j < m; ++j) scale = std::max({scale, std::abs(p.G[j]), std::abs(p.g[j])});
  const bool open_top =
      std::abs(p.G.back()) > 1e-10 * scale || std::abs(p.g[m - 2]) > 1e-10 * scale;

  RadiationProfile out;
  out.dim = p.dim;
  out.d_eta = de;
  out.eta_min = p.eta_min - static_cast<double>(pad) * de;
  const std::size_t n = m + pad;
  std::vector<double> g(n, 0.0);
  const double top_lo = p.eta_max() - kTaperLength - 3.0 * de;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = out.eta(i);
    double val;
    if (i < pad) {
      val = p.g.front() * detail::smooth_step((e - (p.eta_min - kTaperLength)) / kTaperLength);
    } else {
      val = p.g[i - pad];
    }
    if (open_top) val *= 1.0 - detail::smooth_step((e - top_lo) / kTaperLength);
    g[i] = val;
  }
  out.G.assign(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) out.G[i] = -(g[i + 1] - g[i - 1]) / (2.0 * de);
  // Zero padding at both ends keeps the support strictly inside.
  out.G.insert(out.G.begin(), 2, 0.0);
  out.G.insert(out.G.end(), 2, 0.0);
  out.eta_min -= 2.0 * de;
  out.attach_primitive();
  return out;
}

}  // namespace

ScatteringPart extract_scattering_part(const Trajectory& traj, double A) {
  if (traj.snapshots.empty()) throw InvalidState("empty trajectory");
  if (traj.status != RunStatus::global) {
    throw PreconditionError("scattering part requires a global trajectory");
  }
  const Dimension dim = traj.dim;
  const RadialState& data = traj.snapshots.front();
  const auto& grid = data.grid;
  const double t0 = data.t;
  const double T = traj.t_last() - t0;

  std::vector<double> u(grid.size());
  const Source source = [&](double t, std::span<double> out) {
    traj.hermite_u(std::clamp(t, t0, traj.t_last()), u);
    const double edge = t - t0 + A;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (grid.node(i) > edge) out[i] = dim.nonlinearity(u[i]);
    }
  };
  const RadialState v = traj.scheme.nonlinear
                            ? solve_inhomogeneous(data, source, T, dim, traj.scheme.cfl,
                                                  traj.scheme.boundary)
                            : solve_inhomogeneous(data, Source{}, T, dim, traj.scheme.cfl,
                                                  traj.scheme.boundary);

  // Read the field in the frame where the data sit at t = 0.
  RadialState v0 = v;
  v0.t = T;
  // The sharp cutoff launches a dispersive front that the scheme smears
  // ahead of r = t + A over a width ~ (T dr^2)^{1/3}; skip that layer.
  const double front = 3.0 * std::cbrt(T * grid.dr() * grid.dr());
  const double eta_lo = std::max(A + front, -T);
  const double eta_hi = grid.r_max() - T - 4.0 * grid.dr();
  if (!(eta_hi > eta_lo + 2.0 * kTaperLength)) {
    throw RangeError("exterior cone leaves no room for the radiation field on this grid");
  }
  const auto lo_nodes = std::ceil((eta_lo + T) / grid.dr() - 1e-9);
  const double eta_start = lo_nodes * grid.dr() - T;
  const RadiationProfile raw = radiation_from_state(v0, dim, eta_start, eta_hi);

  const RadiationProfile tapered = tapered_profile(raw);
  double scale = 0.0;
  for (double x : tapered.G) scale = std::max(scale, std::abs(x));
  InverseOptions inv;
  inv.dr = grid.dr();
  inv.cfl = traj.scheme.cfl;
  RadialState vl = scale > 0.0 ? inverse_radiation(tapered, inv) : RadialState::zero(grid);
  vl.t = t0;
  const double e = linear_energy(vl, dim);
  return ScatteringPart{std::move(vl), A, raw, e};
}

std::vector<double> exterior_defect_series(const Trajectory& traj, const ScatteringPart& scat,
                                           double A, std::span<const double> times) {
  const Dimension dim = traj.dim;
  const auto& grid = traj.grid();
  const double area = dim.sphere_area();
  const int N = dim.value();
  const bool exact = N == 3;

  std::vector<double> out;
  out.reserve(times.size());
  // Room for v_L to travel over the requested times without touching the edge.
  double t_far = 0.0;
  for (double t : times) t_far = std::max(t_far, std::abs(t - scat.data.t));
  const double dr = scat.data.grid.dr();
  const double room = std::max(scat.data.grid.r_max(), grid.r_max()) + t_far + 4.0 * dr;
  const RadialState start = resample(scat.data, RadialGrid::from_spacing(std::ceil(room / dr) * dr, dr));
  RadialState vl = start;
  for (double t : times) {
    const RadialState u = traj.at(t);
    if (exact) {
      vl = evolve_linear_exact_3d(start, t - start.t);
    } else if (t != vl.t) {
      vl = evolve_linear_numeric(vl, t - vl.t, dim, traj.scheme.cfl, BoundaryPolicy::frozen);
    }
    const RadialState w = resample(vl, grid);
    std::vector<double> diff(grid.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = u.u[i] - w.u[i];
    const auto dr_diff = radial_derivative(grid, diff);
    std::vector<double> f(grid.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double r = grid.node(i);
      const double dt_diff = u.v[i] - w.v[i];
      const double dens = dr_diff[i] * dr_diff[i] + dt_diff * dt_diff + dim.critical_power(u.u[i]);
      const double hardy = N == 3 ? u.u[i] * u.u[i] : u.u[i] * u.u[i] * std::pow(r, N - 3);
      f[i] = area * (dens * std::pow(r, N - 1) + hardy);
    }
    out.push_back(integrate_slice(grid, f, t - traj.t_begin(), RegionSpec::exterior_cone(A),
                                  RadialMeasure::plain()));
  }
  return out;
}

double exterior_defect(const Trajectory& traj, const ScatteringPart& scat, double A, double t) {
  const double ts[] = {t};
  return exterior_defect_series(traj, scat, A, ts).front();
}

}  // namespace wavecone
