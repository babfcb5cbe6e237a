#include "wavecone/linear.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wavecone/error.hpp"

namespace wavecone {

void LinearEvolution::validate() const {
  data.validate();
  if (method == LinearMethod::exact_3d && dim.value() != 3) {
    throw ConfigError("the exact propagator is only available for N = 3");
  }
  if (method == LinearMethod::numeric &&
      (!(cfl > 0.0) || cfl > LeapfrogStepper::max_stable_cfl(dim))) {
    throw ConfigError("CFL ratio outside the stable range");
  }
}

RadialState LinearEvolution::at(double t) const {
  validate();
  if (method == LinearMethod::exact_3d) return evolve_linear_exact_3d(data, t - data.t);
  return evolve_linear_numeric(data, t - data.t, dim, cfl, boundary);
}

void check_causal_window(const RadialState& data, double t, double margin) {
  const double m = data.support_radius();
  if (m == 0.0) return;
  if (m + std::abs(t) + margin > data.grid.r_max() * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "causal window violated: support " << m << " + |t| " << std::abs(t) << " exceeds r_max "
       << data.grid.r_max();
    throw DomainTooSmall(os.str());
  }
}

namespace {

// Odd extension of node samples w (w_0 = 0) evaluated at any x by linear
// interpolation; zero beyond the grid.
struct OddProfile {
  const RadialGrid& grid;
  std::span<const double> w;
  double operator()(double x) const {
    return x < 0.0 ? -grid.interpolate(w, -x) : grid.interpolate(w, x);
  }
};

struct EvenProfile {
  const RadialGrid& grid;
  std::span<const double> w;
  double operator()(double x) const { return grid.interpolate(w, std::abs(x)); }
};

}  // namespace

RadialState evolve_linear_exact_3d(const RadialState& data, double t) {
  data.validate();
  check_causal_window(data, t, 0.0);
  const auto& grid = data.grid;
  const std::size_t n = grid.size();
  const double h = grid.dr();

  std::vector<double> w0(n), w1(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = grid.node(i);
    w0[i] = r * data.u[i];
    w1[i] = r * data.v[i];
  }
  // w0' (even), centered with the odd reflection w0(-h) = -w0(h) at the origin.
  std::vector<double> dw0(n);
  dw0[0] = w0[1] / h;
  for (std::size_t i = 1; i + 1 < n; ++i) dw0[i] = (w0[i + 1] - w0[i - 1]) / (2.0 * h);
  dw0[n - 1] = (3.0 * w0[n - 1] - 4.0 * w0[n - 2] + w0[n - 3]) / (2.0 * h);
  // P(x) = int_0^x w1 (even in x), cumulative trapezoid.
  std::vector<double> prim(n);
  prim[0] = 0.0;
  for (std::size_t i = 1; i < n; ++i) prim[i] = prim[i - 1] + 0.5 * h * (w1[i - 1] + w1[i]);
  // Beyond the grid the data vanish, so P is constant there.
  const double p_inf = prim[n - 1];
  auto P = [&](double x) {
    const double ax = std::abs(x);
    return ax >= grid.r_max() ? p_inf : grid.interpolate(prim, ax);
  };

  const OddProfile W0{grid, w0};
  const OddProfile W1{grid, w1};
  const EvenProfile DW0{grid, dw0};

  RadialState out = RadialState::zero(grid, data.t + t);
  std::vector<double> w(n), wt(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = grid.node(i);
    const double a = r + t, b = r - t;
    w[i] = 0.5 * (W0(a) + W0(b)) + 0.5 * (P(a) - P(b));
    wt[i] = 0.5 * (DW0(a) - DW0(b)) + 0.5 * (W1(a) + W1(b));
  }
  for (std::size_t i = 1; i < n; ++i) {
    const double r = grid.node(i);
    out.u[i] = w[i] / r;
    out.v[i] = wt[i] / r;
  }
  out.u[0] = even_origin_value(out.u[1], out.u[2]);
  out.v[0] = even_origin_value(out.v[1], out.v[2]);
  return out;
}

RadialState solve_inhomogeneous(const RadialState& data, const Source& source, double t,
                                Dimension dim, double cfl, BoundaryPolicy boundary) {
  data.validate();
  if (!(cfl > 0.0) || cfl > LeapfrogStepper::max_stable_cfl(dim)) {
    std::ostringstream os;
    os << "CFL ratio " << cfl << " exceeds the stable bound "
       << LeapfrogStepper::max_stable_cfl(dim) << " for N = " << dim.value();
    throw ConfigError(os.str());
  }
  if (boundary == BoundaryPolicy::causal) check_causal_window(data, t, 2.0 * data.grid.dr());

  LeapfrogStepper stepper(data.grid, dim);
  RadialState s = data;
  const std::size_t steps = step_count(t, data.grid.dr(), cfl);
  if (steps == 0) return s;
  const double h = t / static_cast<double>(steps);

  Forcing forcing;
  if (source) {
    forcing = [&source](double time, std::span<const double>, std::span<double> out) {
      source(time, out);
    };
  }
  std::vector<double> accel(s.u.size());
  stepper.acceleration(data.t, s.u, accel, forcing);
  for (std::size_t k = 0; k < steps; ++k) {
    const double tk = data.t + h * static_cast<double>(k);
    stepper.step(s.u, s.v, accel, tk, h, forcing);
  }
  s.t = data.t + t;
  return s;
}

RadialState evolve_linear_numeric(const RadialState& data, double t, Dimension dim, double cfl,
                                  BoundaryPolicy boundary) {
  return solve_inhomogeneous(data, Source{}, t, dim, cfl, boundary);
}

TabulatedSource::TabulatedSource(std::vector<double> times,
                                 std::vector<std::vector<double>> samples)
    : times_(std::move(times)), samples_(std::move(samples)) {
  if (times_.size() != samples_.size() || times_.empty()) {
    throw ConfigError("tabulated source needs one sample row per time");
  }
  if (!std::is_sorted(times_.begin(), times_.end())) {
    throw ConfigError("tabulated source times must increase");
  }
}

void TabulatedSource::operator()(double t, std::span<double> out) const {
  if (t < times_.front() || t > times_.back()) return;
  if (times_.size() == 1) {
    const auto& row = samples_[0];
    for (std::size_t i = 0; i < out.size() && i < row.size(); ++i) out[i] = row[i];
    return;
  }
  auto it = std::upper_bound(times_.begin(), times_.end(), t);
  std::size_t j = static_cast<std::size_t>(it - times_.begin());
  j = std::clamp<std::size_t>(j, 1, times_.size() - 1);
  const double s = (t - times_[j - 1]) / (times_[j] - times_[j - 1]);
  const auto& a = samples_[j - 1];
  const auto& b = samples_[j];
  for (std::size_t i = 0; i < out.size() && i < a.size(); ++i) {
    out[i] = (1.0 - s) * a[i] + s * b[i];
  }
}

}  // namespace wavecone
