#include "wavecone/radiation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wavecone/energy.hpp"
#include "wavecone/error.hpp"
#include "wavecone/quadrature.hpp"

namespace wavecone {

double RadiationProfile::norm_squared() const {
  std::vector<double> sq(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) sq[i] = G[i] * G[i];
  return dim.sphere_area() * trapezoid(sq, d_eta);
}

double RadiationProfile::primitive_gradient_norm_squared() const {
  if (!has_primitive()) throw InvalidState("profile has no primitive attached");
  const std::size_t n = g.size();
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    double d;
    if (i == 0) {
      d = (g[1] - g[0]) / d_eta;
    } else if (i + 1 == n) {
      d = (g[n - 1] - g[n - 2]) / d_eta;
    } else {
      d = (g[i + 1] - g[i - 1]) / (2.0 * d_eta);
    }
    sq[i] = d * d;
  }
  return dim.sphere_area() * trapezoid(sq, d_eta);
}

void RadiationProfile::attach_primitive() {
  const std::size_t n = G.size();
  g.assign(n, 0.0);
  for (std::size_t i = n - 1; i-- > 0;) g[i] = g[i + 1] + 0.5 * d_eta * (G[i] + G[i + 1]);
}

namespace {

double interp(std::span<const double> f, double x0, double h, double x) {
  if (f.empty()) return 0.0;
  const double s = (x - x0) / h;
  if (s < 0.0 || s > static_cast<double>(f.size() - 1)) return 0.0;
  auto i = static_cast<std::size_t>(s);
  if (i + 1 >= f.size()) return f.back();
  const double a = s - static_cast<double>(i);
  return (1.0 - a) * f[i] + a * f[i + 1];
}

}  // namespace

double RadiationProfile::G_at(double e) const noexcept { return interp(G, eta_min, d_eta, e); }
double RadiationProfile::g_at(double e) const noexcept { return interp(g, eta_min, d_eta, e); }

void RadiationProfile::validate() const {
  if (G.size() < 3 || !(d_eta > 0.0)) throw InvalidState("radiation profile needs >= 3 samples");
  for (double x : G) {
    if (!std::isfinite(x)) throw InvalidState("radiation profile has non-finite samples");
  }
  if (!has_primitive()) return;
  if (g.size() != G.size()) throw InvalidState("primitive size does not match the profile");
  double scale = 0.0, worst = 0.0;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    const double dg = (g[i + 1] - g[i]) / d_eta;
    const double mid = -0.5 * (G[i] + G[i + 1]);
    scale = std::max(scale, std::abs(mid));
    worst = std::max(worst, std::abs(dg - mid));
  }
  if (worst > 1e-8 * std::max(scale, 1e-300)) {
    throw InvalidState("primitive derivative does not match -G");
  }
}

RadiationProfile gaussian_profile(Dimension dim, double center, double width, double eta_min,
                                  double eta_max, double d_eta, double amplitude) {
  if (!(width > 0.0) || !(d_eta > 0.0) || !(eta_max > eta_min)) {
    throw ConfigError("gaussian profile needs width > 0, d_eta > 0 and eta_min < eta_max");
  }
  RadiationProfile p;
  p.dim = dim;
  p.eta_min = eta_min;
  p.d_eta = d_eta;
  const auto n = static_cast<std::size_t>(std::llround((eta_max - eta_min) / d_eta)) + 1;
  p.G.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = (p.eta(i) - center) / width;
    p.G[i] = amplitude * s / width * std::exp(-0.5 * s * s);
  }
  p.attach_primitive();
  return p;
}

RadiationProfile radiation_from_state(const RadialState& state, Dimension dim, double eta_min,
                                      double eta_max, double d_eta) {
  state.validate();
  const auto& grid = state.grid;
  if (d_eta <= 0.0) d_eta = grid.dr();
  if (!(eta_max > eta_min)) throw RangeError("eta range must satisfy eta_min < eta_max");
  const double tol = 1e-9 * grid.dr();
  if (state.t + eta_min < -tol || state.t + eta_max > grid.r_max() + tol) {
    std::ostringstream os;
    os << "eta range [" << eta_min << ", " << eta_max << "] at T = " << state.t
       << " leaves the grid [0, " << grid.r_max() << "]";
    throw RangeError(os.str());
  }
  const double k = dim.radiation_weight();
  const std::size_t n = grid.size();
  const auto ur = radial_derivative(grid, state.u);
  std::vector<double> out_node(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = grid.node(i);
    const double rk = std::pow(r, k);
    const double wt = rk * state.v[i];
    const double wr = rk * ur[i] + k * std::pow(r, k - 1.0) * state.u[i];
    out_node[i] = 0.5 * (wt - wr);
  }
  const auto m = static_cast<std::size_t>(std::llround((eta_max - eta_min) / d_eta)) + 1;
  RadiationProfile p;
  p.dim = dim;
  p.eta_min = eta_min;
  p.d_eta = d_eta;
  p.G.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double r = std::clamp(state.t + p.eta(j), 0.0, grid.r_max());
    p.G[j] = grid.interpolate(out_node, r);
  }
  p.attach_primitive();
  return p;
}

RadiationProfile extract_radiation(const LinearEvolution& ev, double T, double eta_min,
                                   double eta_max) {
  if (!(T + eta_min > 0.0)) throw RangeError("observation time too small: T + eta_min <= 0");
  const auto state = ev.at(T);
  return radiation_from_state(state, ev.dim, eta_min, eta_max);
}

double incoming_residual(const LinearEvolution& ev, double T, double eta_min, double eta_max) {
  const auto state = ev.at(T);
  const auto& grid = state.grid;
  const double tol = 1e-9 * grid.dr();
  if (T + eta_min < -tol || T + eta_max > grid.r_max() + tol || !(eta_max > eta_min)) {
    throw RangeError("eta range leaves the grid");
  }
  const double k = ev.dim.radiation_weight();
  const std::size_t n = grid.size();
  const auto ur = radial_derivative(grid, state.u);
  std::vector<double> in_node(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = grid.node(i);
    const double rk = std::pow(r, k);
    const double wt = rk * state.v[i];
    const double wr = rk * ur[i] + k * std::pow(r, k - 1.0) * state.u[i];
    const double x = 0.5 * (wt + wr);
    in_node[i] = x * x;
  }
  const double s = integrate_interval(grid, in_node, T + eta_min, T + eta_max);
  return std::sqrt(ev.dim.sphere_area() * s);
}

RadialState inverse_radiation(const RadiationProfile& profile, const InverseOptions& options) {
  profile.validate();
  if (!profile.has_primitive()) throw PreconditionError("inverse_radiation needs a primitive g");
  const Dimension dim = profile.dim;
  const std::size_t m = profile.size();

  double scale = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    scale = std::max({scale, std::abs(profile.G[j]), std::abs(profile.g[j])});
  }
  const double dr = options.dr > 0.0 ? options.dr : profile.d_eta;
  if (scale == 0.0) {
    return RadialState::zero(RadialGrid::from_spacing(dr * 64, dr));
  }
  const double cut = options.support_tolerance * scale;
  std::size_t lo = m, hi = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (std::abs(profile.G[j]) > cut || std::abs(profile.g[j]) > cut) {
      lo = std::min(lo, j);
      hi = j;
    }
  }
  if (lo == 0 || hi + 1 == m) {
    throw RangeError("profile is not compactly supported inside its eta range");
  }
  const double eta_lo = profile.eta(lo - 1);
  const double eta_hi = profile.eta(hi + 1);
  const double support = std::max(std::abs(eta_lo), std::abs(eta_hi));
  double T_far = options.T_far;
  if (std::isnan(T_far)) T_far = eta_hi + 4.0 * support;
  if (!(T_far + eta_lo > 0.0)) throw RangeError("T_far too small for the profile support");
  // Put the profile nodes on grid nodes at T_far, so the ansatz samples g and
  // G without interpolation.
  T_far = std::ceil((T_far + profile.eta_min) / dr - 1e-9) * dr - profile.eta_min;

  // Room for the backward flow from T_far: the data there reach T_far + eta_hi.
  const double margin = 8.0 * dr;
  const double r_needed = 2.0 * T_far + profile.eta_max() + margin;
  const double r_max = std::ceil(r_needed / dr) * dr;
  const auto grid = RadialGrid::from_spacing(r_max, dr);
  const double k = dim.radiation_weight();
  const double c_n = 0.25 * (dim.value() - 1) * (dim.value() - 3);

  // Outgoing ansatz r^{-k} g(r - t), whose time derivative is r^{-k} G(r - t).
  auto ansatz = [&](double t) {
    RadialState s = RadialState::zero(grid, t);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const double r = grid.node(i);
      const double rk = std::pow(r, -k);
      s.u[i] = rk * profile.g_at(r - t);
      s.v[i] = rk * profile.G_at(r - t);
    }
    return s;
  };

  if (dim.value() == 3) {
    // r v = g(r - t) - g(-r - t) solves the free equation exactly.
    const auto small = RadialGrid::from_spacing(
        std::ceil((std::max(profile.eta_max(), -profile.eta_min) + margin) / dr) * dr, dr);
    RadialState s = RadialState::zero(small);
    for (std::size_t i = 1; i < small.size(); ++i) {
      const double r = small.node(i);
      s.u[i] = (profile.g_at(r) - profile.g_at(-r)) / r;
      s.v[i] = (profile.G_at(r) - profile.G_at(-r)) / r;
    }
    s.u[0] = even_origin_value(s.u[1], s.u[2]);
    s.v[0] = even_origin_value(s.v[1], s.v[2]);
    return s;
  }

  // Join where the ansatz is still away from the origin.
  const double T_join = std::min(T_far, std::max(0.0, 1.0 - eta_lo));
  RadialState eps = RadialState::zero(grid, T_far);
  const Source minus_h = [&](double t, std::span<double> out) {
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
      const double r = grid.node(i);
      out[i] = -c_n * profile.g_at(r - t) / std::pow(r, 0.5 * (dim.value() + 3));
    }
  };
  eps = solve_inhomogeneous(eps, minus_h, T_join - T_far, dim, options.cfl,
                            BoundaryPolicy::frozen);
  RadialState v = ansatz(T_join);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    v.u[i] += eps.u[i];
    v.v[i] += eps.v[i];
  }
  v.u[0] = even_origin_value(v.u[1], v.u[2]);
  v.v[0] = even_origin_value(v.v[1], v.v[2]);
  return evolve_linear_numeric(v, -T_join, dim, options.cfl, BoundaryPolicy::causal);
}

double conformal_profile(const LinearEvolution& ev, double rho, double sigma) {
  if (ev.dim.value() != 3 || ev.method != LinearMethod::exact_3d) {
    throw PreconditionError("conformal_profile needs an exact N = 3 evolution");
  }
  if (!(sigma >= 0.0)) throw RangeError("sigma must be >= 0");
  const auto& grid = ev.data.grid;
  const double M = ev.data.support_radius();
  const double window = grid.r_max() - M;
  auto reachable = [&](double r) {
    return r > 0.0 && r <= grid.r_max() && std::abs(r - rho - ev.data.t) <= window;
  };
  auto sample = [&](double s) {
    const double r = 1.0 / s;
    if (!reachable(r)) {
      std::ostringstream os;
      os << "(rho, sigma) = (" << rho << ", " << s << ") is outside the causal window";
      throw RangeError(os.str());
    }
    const auto state = ev.at(r - rho);
    return r * grid.interpolate(state.u, r);
  };
  if (sigma > 0.0) return sample(sigma);

  const double r_reach = std::min(grid.r_max(), rho + ev.data.t + window);
  if (!(r_reach > 0.0)) throw RangeError("no reachable sigma for this rho");
  const double s0 = 1.0 / r_reach;
  // Least-squares line through (j s0, F_j), j = 1, 2, 3, evaluated at 0.
  const double f1 = sample(s0), f2 = sample(2.0 * s0), f3 = sample(3.0 * s0);
  return (4.0 * f1 + f2 - 2.0 * f3) / 3.0;
}

std::vector<InteriorSample> vanishing_interior_check(const LinearEvolution& ev, double R,
                                                     std::span<const double> times) {
  std::vector<InteriorSample> out;
  out.reserve(times.size());
  for (double t : times) {
    const auto s = ev.at(t);
    InteriorSample row;
    row.t = t;
    const auto norms = sobolev_norms(s, ev.dim);
    row.hardy = norms.hardy * norms.hardy;
    if (t - R > 0.0) {
      const auto ur = radial_derivative(s.grid, s.u);
      std::vector<double> dens(ur.size());
      for (std::size_t i = 0; i < dens.size(); ++i) dens[i] = s.v[i] * s.v[i] + ur[i] * ur[i];
      row.interior_energy = integrate_slice(s.grid, dens, t, RegionSpec::ball(t - R),
                                            RadialMeasure::volume(ev.dim));
    }
    out.push_back(row);
  }
  return out;
}

std::vector<ChannelSample> channels_exterior_energy(const RadialState& data,
                                                    std::span<const double> times) {
  data.validate();
  const bool u_zero = std::all_of(data.u.begin(), data.u.end(), [](double x) { return x == 0.0; });
  const bool v_zero = std::all_of(data.v.begin(), data.v.end(), [](double x) { return x == 0.0; });
  if (!u_zero && !v_zero) {
    throw PreconditionError("channels of energy need data of the form (v0, 0) or (0, v1)");
  }
  const Dimension dim{3};
  const double total = 2.0 * linear_energy(data, dim);
  std::vector<ChannelSample> out;
  out.reserve(times.size());
  for (double t : times) {
    const auto s = evolve_linear_exact_3d(data, t - data.t);
    const auto ur = radial_derivative(s.grid, s.u);
    std::vector<double> dens(ur.size());
    for (std::size_t i = 0; i < dens.size(); ++i) dens[i] = s.v[i] * s.v[i] + ur[i] * ur[i];
    ChannelSample row;
    row.t = t;
    row.exterior = integrate_slice(s.grid, dens, t, RegionSpec::exterior_cone(0.0),
                                   RadialMeasure::volume(dim));
    row.fraction = total > 0.0 ? row.exterior / total : 0.0;
    out.push_back(row);
  }
  return out;
}

}  // namespace wavecone
