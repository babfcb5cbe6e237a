#include "wavecone/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "smooth.hpp"
#include "wavecone/energy.hpp"
#include "wavecone/error.hpp"
#include "wavecone/solitons.hpp"

namespace wavecone {

double strichartz_norm(const Trajectory& traj, const RegionSpec& region) {
  region.validate();
  if (traj.snapshots.empty()) throw InvalidState("empty trajectory");
  const double tb = traj.t_begin(), tl = traj.t_last();
  const double tol = 1e-12 * std::max(1.0, std::abs(tl));
  if ((std::isfinite(region.t0) && region.t0 < tb - tol) ||
      (std::isfinite(region.t1) && region.t1 > tl + tol)) {
    std::ostringstream os;
    os << "region times [" << region.t0 << ", " << region.t1 << "] exceed the trajectory range ["
       << tb << ", " << tl << "]";
    throw RangeError(os.str());
  }
  const Dimension dim = traj.dim;
  const double q = dim.strichartz_exponent();
  const auto times = traj.times();
  std::vector<double> slices(times.size());
  std::vector<double> f(traj.grid().size());
  for (std::size_t j = 0; j < times.size(); ++j) {
    const auto& s = traj.snapshots[j];
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::pow(std::abs(s.u[i]), q);
    slices[j] = std::sqrt(integrate_slice(s.grid, f, s.t, region, RadialMeasure::volume(dim)));
  }
  const double integral = integrate_time_series(times, slices, region.t0, region.t1);
  return std::pow(integral, 1.0 / (0.5 * q));
}

double e1_norm(const RadialState& state, Dimension dim) {
  state.validate();
  const auto ur = radial_derivative(state.grid, state.u);
  std::vector<double> f(ur.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = state.v[i] * state.v[i] + ur[i] * ur[i];
  return std::sqrt(radial_integral(state.grid, f, dim));
}

double e1_norm_axisymmetric(const RadialState& state, Dimension dim, std::size_t n_mu) {
  state.validate();
  const auto rule = angular_rule(dim, n_mu);
  const auto ur = radial_derivative(state.grid, state.u);
  const auto w = radial_weights(state.grid, dim);
  const double to_axis = dim.equator_area() / dim.sphere_area();
  double total = 0.0;
  for (std::size_t i = 0; i < ur.size(); ++i) {
    double ang = 0.0;
    for (std::size_t k = 0; k < rule.mu.size(); ++k) {
      const double mu = rule.mu[k];
      const double d1 = ur[i] * mu;
      const double lead = state.v[i] + d1;
      ang += rule.weight[k] * (lead * lead + ur[i] * ur[i] * (1.0 - mu * mu));
    }
    total += w[i] * to_axis * ang;
  }
  return std::sqrt(total);
}

double cutoff(double rho, double alpha) {
  return 1.0 - detail::smooth_step(4.0 * rho / alpha - 1.0);
}

double cutoff_derivative(double rho, double alpha) {
  return -detail::smooth_step_derivative(4.0 * rho / alpha - 1.0) * 4.0 / alpha;
}

double VirialReport::max_residual(const std::string& identity) const {
  const auto& names = virial_identities();
  if (std::find(names.begin(), names.end(), identity) == names.end()) {
    throw ConfigError("unknown virial identity '" + identity + "'");
  }
  double m = 0.0;
  for (const auto& row : rows) {
    if (row.identity == identity) m = std::max(m, std::abs(row.residual));
  }
  return m;
}

namespace {

constexpr std::size_t kIdentities = 5;

struct Snapshot {
  double a = 0, b = 0, c = 0, d = 0;
  double F[kIdentities] = {};
  double R[kIdentities] = {};
};

// Radial window centred at the origin.
Snapshot localize_radial(const RadialState& s, Dimension dim, double alpha,
                         const std::vector<double>& w) {
  const int n = dim.value();
  const double kappa = dim.potential_coefficient();
  const auto ur = radial_derivative(s.grid, s.u);
  Snapshot out;
  double cross = 0.0, dil_g = 0.0, dil_t = 0.0, dil_m = 0.0, dil_p = 0.0, flux = 0.0;
  for (std::size_t i = 0; i < ur.size(); ++i) {
    const double r = s.grid.node(i);
    if (r >= 0.5 * alpha) break;
    const double phi = cutoff(r, alpha), dphi = cutoff_derivative(r, alpha);
    const double ut = s.v[i], u = s.u[i], g = ur[i];
    const double q = dim.critical_power(u);
    const double wi = w[i];
    out.a += wi * ut * ut * phi;
    out.b += wi * g * g * phi;
    out.c += wi * q * phi;
    out.F[0] += wi * u * ut * phi;
    out.F[1] += wi * r * g * ut * phi;
    out.F[4] += wi * (0.5 * ut * ut + 0.5 * g * g - kappa * q) * phi;
    cross += wi * u * g * dphi;
    dil_g += wi * g * g * r * dphi;
    dil_t += wi * ut * ut * r * dphi;
    dil_m += wi * (r * g) * (g * dphi);
    dil_p += wi * q * r * dphi;
    flux += wi * ut * g * dphi;
  }
  out.R[0] = out.a - out.b + out.c - cross;
  out.R[1] = -0.5 * n * out.a + (0.5 * n - 1.0) * (out.b - out.c) + 0.5 * dil_g - 0.5 * dil_t -
             dil_m - kappa * dil_p;
  out.R[4] = -flux;
  // The moment and momentum integrands are odd in x_1: both sides vanish.
  return out;
}

// Window centred at center * e1, (r, mu) quadrature.
Snapshot localize_axisymmetric(const RadialState& s, Dimension dim, double alpha, double center,
                               const AngularRule& rule) {
  const int n = dim.value();
  const double kappa = dim.potential_coefficient();
  const auto& grid = s.grid;
  const auto ur = radial_derivative(grid, s.u);
  const double h = grid.dr();
  const double area = dim.equator_area();
  const double lo = std::max(0.0, std::abs(center) - 0.5 * alpha);
  const double hi = std::abs(center) + 0.5 * alpha;
  const std::size_t i0 = grid.floor_index(lo);
  const std::size_t i1 = std::min(grid.size() - 1, grid.floor_index(hi) + 1);

  Snapshot out;
  double cross = 0, dil_g = 0, dil_t = 0, dil_m = 0, dil_p = 0, flux = 0, mom_flux = 0;
  double mom_t = 0, mom_g = 0, mom_m = 0, mom_p = 0;
  for (std::size_t i = i0; i <= i1; ++i) {
    const double r = grid.node(i);
    const double wr = (i == 0 || i + 1 == grid.size() ? 0.5 : 1.0) * h * std::pow(r, n - 1) * area;
    if (wr == 0.0) continue;
    const double ut = s.v[i], u = s.u[i], g = ur[i];
    const double q = dim.critical_power(u);
    const double e = 0.5 * ut * ut + 0.5 * g * g - kappa * q;
    for (std::size_t k = 0; k < rule.mu.size(); ++k) {
      const double mu = rule.mu[k];
      const double W = wr * rule.weight[k];
      const double y1 = r * mu - center;
      const double xy = r - center * mu;  // x_hat . y
      const double rho = std::sqrt(std::max(0.0, r * r - 2.0 * center * r * mu + center * center));
      const double phi = cutoff(rho, alpha);
      const double dphi = cutoff_derivative(rho, alpha);
      if (phi == 0.0 && dphi == 0.0) continue;
      const double grad_dot = rho > 0.0 ? g * dphi * xy / rho : 0.0;  // grad u . grad phi
      const double y_grad_u = g * xy;
      const double y_grad_phi = dphi * rho;
      const double d1u = g * mu;
      const double d1phi = rho > 0.0 ? dphi * y1 / rho : 0.0;

      out.a += W * ut * ut * phi;
      out.b += W * g * g * phi;
      out.c += W * q * phi;
      out.d += W * d1u * ut * phi;
      out.F[0] += W * u * ut * phi;
      out.F[1] += W * y_grad_u * ut * phi;
      out.F[2] += W * y1 * e * phi;
      out.F[4] += W * e * phi;
      cross += W * u * grad_dot;
      dil_g += W * g * g * y_grad_phi;
      dil_t += W * ut * ut * y_grad_phi;
      dil_m += W * y_grad_u * grad_dot;
      dil_p += W * q * y_grad_phi;
      flux += W * ut * grad_dot;
      mom_flux += W * y1 * ut * grad_dot;
      mom_t += W * ut * ut * d1phi;
      mom_g += W * g * g * d1phi;
      mom_m += W * d1u * grad_dot;
      mom_p += W * q * d1phi;
    }
  }
  out.F[3] = out.d;
  out.R[0] = out.a - out.b + out.c - cross;
  out.R[1] = -0.5 * n * out.a + (0.5 * n - 1.0) * (out.b - out.c) + 0.5 * dil_g - 0.5 * dil_t -
             dil_m - kappa * dil_p;
  out.R[2] = -out.d - mom_flux;
  out.R[3] = -0.5 * mom_t + 0.5 * mom_g - mom_m - kappa * mom_p;
  out.R[4] = -flux;
  return out;
}

}  // namespace

VirialReport virial_report(const Trajectory& traj, double alpha, double center,
                           std::size_t n_mu) {
  if (traj.snapshots.empty()) throw InvalidState("empty trajectory");
  if (!(alpha > 0.0)) throw ConfigError("virial window alpha must be positive");
  const auto& grid = traj.grid();
  if (std::abs(center) + 0.5 * alpha > grid.r_max()) {
    std::ostringstream os;
    os << "virial window |c| + alpha/2 = " << std::abs(center) + 0.5 * alpha
       << " exceeds r_max = " << grid.r_max();
    throw RangeError(os.str());
  }
  const Dimension dim = traj.dim;
  const std::size_t J = traj.snapshots.size();
  std::vector<Snapshot> snaps(J);
  if (center == 0.0) {
    const auto w = radial_weights(grid, dim);
    for (std::size_t j = 0; j < J; ++j) snaps[j] = localize_radial(traj.snapshots[j], dim, alpha, w);
  } else {
    const auto rule = angular_rule(dim, n_mu);
    for (std::size_t j = 0; j < J; ++j) {
      snaps[j] = localize_axisymmetric(traj.snapshots[j], dim, alpha, center, rule);
    }
  }

  VirialReport rep;
  rep.alpha = alpha;
  rep.center = center;
  rep.times = traj.times();
  for (const auto& s : snaps) {
    rep.a.push_back(s.a);
    rep.b.push_back(s.b);
    rep.c.push_back(s.c);
    rep.d.push_back(s.d);
  }
  const auto& names = virial_identities();
  for (std::size_t j = 1; j + 1 < J; ++j) {
    const double hm = rep.times[j] - rep.times[j - 1];
    const double hp = rep.times[j + 1] - rep.times[j];
    for (std::size_t k = 0; k < kIdentities; ++k) {
      const double fm = snaps[j - 1].F[k], f0 = snaps[j].F[k], fp = snaps[j + 1].F[k];
      // Second-order derivative on a possibly uneven three-point stencil.
      const double lhs = (hm * hm * fp - hp * hp * fm + (hp * hp - hm * hm) * f0) / (hm * hp * (hm + hp));
      const double rhs = snaps[j].R[k];
      rep.rows.push_back(VirialRow{rep.times[j], names[k], lhs, rhs, lhs - rhs});
    }
  }
  return rep;
}

PohozaevCheck localized_pohozaev_check(Dimension dim, double alpha, double center) {
  if (!(alpha > 0.0)) throw ConfigError("alpha must be positive");
  const int n = dim.value();
  const auto gl = gauss_legendre(16);
  const auto rule = angular_rule(dim, center == 0.0 ? 2 : 128);
  const double lo = std::max(0.0, std::abs(center) - 0.5 * alpha);
  const double hi = std::abs(center) + 0.5 * alpha;
  constexpr int kPanels = 256;
  const double width = (hi - lo) / kPanels;
  PohozaevCheck out;
  for (int p = 0; p < kPanels; ++p) {
    const double a = lo + width * p;
    for (std::size_t m = 0; m < gl.mu.size(); ++m) {
      const double r = a + 0.5 * width * (gl.mu[m] + 1.0);
      const double wr = 0.5 * width * gl.weight[m] * std::pow(r, n - 1) * dim.equator_area();
      const double W = eval_W(r, dim), dW = eval_W_prime(r, dim);
      for (std::size_t k = 0; k < rule.mu.size(); ++k) {
        const double mu = rule.mu[k];
        const double rho = std::sqrt(std::max(0.0, r * r - 2.0 * center * r * mu + center * center));
        const double phi = cutoff(rho, alpha);
        const double grad_dot = rho > 0.0 ? dW * cutoff_derivative(rho, alpha) * (r - center * mu) / rho : 0.0;
        const double w = wr * rule.weight[k];
        out.gradient += w * dW * dW * phi;
        out.potential += w * dim.critical_power(W) * phi;
        out.boundary -= w * W * grad_dot;
      }
    }
  }
  out.relative_residual = std::abs(out.gradient - out.potential - out.boundary) / out.gradient;
  return out;
}

}  // namespace wavecone
