#include "wavecone/solitons.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "wavecone/energy.hpp"
#include "wavecone/error.hpp"
#include "wavecone/quadrature.hpp"

namespace wavecone {

double eval_W(double r, Dimension dim) {
  const int n = dim.value();
  const double base = 1.0 + r * r / (n * (n - 2));
  switch (n) {
    case 3:
      return 1.0 / std::sqrt(base);
    case 4:
      return 1.0 / base;
    default:
      return 1.0 / (base * std::sqrt(base));
  }
}

double eval_W_prime(double r, Dimension dim) {
  const int n = dim.value();
  const double base = 1.0 + r * r / (n * (n - 2));
  return -(r / n) * std::pow(base, -0.5 * n);
}

RadialState ground_state(const RadialGrid& grid, Dimension dim, double amplitude, double lambda) {
  if (!(lambda > 0.0)) throw PreconditionError("ground state scale must be positive");
  const double scale = amplitude * std::pow(lambda, -0.5 * (dim.value() - 2));
  return RadialState::from_functions(
      grid, [&](double r) { return scale * eval_W(r / lambda, dim); }, [](double) { return 0.0; });
}

double elliptic_residual(const RadialGrid& grid, Dimension dim, double r_cut) {
  const double h = grid.dr();
  const int n = dim.value();
  const auto w = sample(grid, [&](double r) { return eval_W(r, dim); });
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size() && grid.node(i) <= r_cut; ++i) {
    double lap;
    if (i == 0) {
      lap = 2.0 * n * (w[1] - w[0]) / (h * h);
    } else {
      const double r = grid.node(i);
      lap = (w[i + 1] - 2.0 * w[i] + w[i - 1]) / (h * h) +
            (n - 1) / r * (w[i + 1] - w[i - 1]) / (2.0 * h);
    }
    worst = std::max(worst, std::abs(lap + dim.nonlinearity(w[i])));
  }
  return worst;
}

double SolitonSpec::speed() const noexcept {
  double s = 0.0;
  for (double c : ell) s += c * c;
  return std::sqrt(s);
}

void SolitonSpec::validate(Dimension dim) const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw PreconditionError("soliton scale lambda must be positive");
  }
  if (sign != 1 && sign != -1) throw PreconditionError("soliton sign must be +1 or -1");
  if (!ell.empty() && ell.size() != static_cast<std::size_t>(dim.value())) {
    throw PreconditionError("boost velocity must have N components");
  }
  if (!(speed() < 1.0)) throw PreconditionError("boost speed |ell| must be < 1");
}

double eval_Q_ell(double t, std::span<const double> x, const SolitonSpec& spec, Dimension dim) {
  spec.validate(dim);
  if (x.size() != static_cast<std::size_t>(dim.value())) {
    throw PreconditionError("point must have N components");
  }
  const double speed = spec.speed();
  double y2 = 0.0;
  if (speed < 1e-8) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double l = spec.ell.empty() ? 0.0 : spec.ell[j];
      const double y = x[j] - t * l;
      y2 += y * y;
    }
  } else {
    const double l2 = speed * speed;
    const double gamma = 1.0 / std::sqrt(1.0 - l2);
    double lx = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) lx += spec.ell[j] * x[j];
    const double c = (gamma - 1.0) * lx / l2 - gamma * t;
    for (std::size_t j = 0; j < x.size(); ++j) {
      const double y = x[j] + c * spec.ell[j];
      y2 += y * y;
    }
  }
  const double scale = spec.sign * std::pow(spec.lambda, -0.5 * (dim.value() - 2));
  return scale * eval_W(std::sqrt(y2) / spec.lambda, dim);
}

double ground_state_energy(Dimension dim) {
  const int n = dim.value();
  const double a = 0.5 * (n + 2), b = 0.5 * (n - 2);
  const double radial = std::pow(n * (n - 2.0), a) / (n * n) * 0.5 * std::beta(a, b);
  return dim.sphere_area() * radial / n;
}

namespace {

// Energy of the boosted profile at t = 0 with nr radial midpoints.
double boosted_energy(const SolitonSpec& spec, Dimension dim, std::size_t nr,
                      const AngularRule& rule) {
  const int n = dim.value();
  const double speed = spec.speed();
  const double gamma = 1.0 / std::sqrt(1.0 - speed * speed);
  const double lambda = spec.lambda;
  const double amp = std::pow(lambda, -0.5 * (n - 2));
  const double L = lambda * gamma;
  const double ds = 1.0 / static_cast<double>(nr);
  double kinetic = 0.0, gradient = 0.0, potential = 0.0;
  for (std::size_t i = 0; i < nr; ++i) {
    const double s = (static_cast<double>(i) + 0.5) * ds;
    const double r = L * s / (1.0 - s);
    const double jac = L / ((1.0 - s) * (1.0 - s)) * std::pow(r, n - 1) * ds;
    for (std::size_t k = 0; k < rule.mu.size(); ++k) {
      const double mu = rule.mu[k];
      const double xp = r * mu;
      const double xq = r * std::sqrt(std::max(0.0, 1.0 - mu * mu));
      const double yp = gamma * xp;
      const double rho = std::hypot(yp, xq);
      const double q = amp * eval_W(rho / lambda, dim);
      // Q'(rho) / rho, with the rho -> 0 limit W''(0) = -1/N.
      const double dq_rho =
          rho > 0.0 ? amp / lambda * eval_W_prime(rho / lambda, dim) / rho : -amp / (lambda * lambda * n);
      const double gpar = dq_rho * gamma * yp;  // d/dx_par
      const double gperp = dq_rho * xq;
      const double qt = -speed * gpar;
      const double w = rule.weight[k] * jac;
      gradient += w * (gpar * gpar + gperp * gperp);
      kinetic += w * qt * qt;
      potential += w * dim.critical_power(q);
    }
  }
  const double area = dim.equator_area();
  return area * (0.5 * gradient + 0.5 * kinetic - dim.potential_coefficient() * potential);
}

}  // namespace

double soliton_energy(const SolitonSpec& spec, Dimension dim) {
  spec.validate(dim);
  const auto rule = angular_rule(dim, 128);
  const double coarse = boosted_energy(spec, dim, 2000, rule);
  const double fine = boosted_energy(spec, dim, 4000, rule);
  if (!(std::abs(fine - coarse) <= 0.01 * std::abs(fine))) {
    std::ostringstream os;
    os << "soliton energy quadrature did not converge: " << coarse << " vs " << fine;
    throw AccuracyError(os.str());
  }
  // Midpoint rule: the error is O(h^2), so extrapolate.
  return (4.0 * fine - coarse) / 3.0;
}

namespace {

struct FitObjective {
  const RadialGrid& grid;
  Dimension dim;
  std::vector<double> weights;
  std::vector<double> du;
  double norm2 = 0.0;

  // ||grad(u - sign W_lambda)||^2 with the same discrete gradient as u.
  double operator()(double log_lambda, int sign) const {
    const double lambda = std::exp(log_lambda);
    const double amp = sign * std::pow(lambda, -0.5 * (dim.value() - 2));
    const auto w = sample(grid, [&](double r) { return amp * eval_W(r / lambda, dim); });
    const auto dw = radial_derivative(grid, w);
    double j = 0.0;
    for (std::size_t i = 0; i < du.size(); ++i) {
      const double d = du[i] - dw[i];
      j += weights[i] * d * d;
    }
    return j;
  }
};

}  // namespace

SolitonFit fit_soliton(const RadialState& state, Dimension dim) {
  state.validate();
  FitObjective f{state.grid, dim, radial_weights(state.grid, dim),
                 radial_derivative(state.grid, state.u)};
  for (std::size_t i = 0; i < f.du.size(); ++i) f.norm2 += f.weights[i] * f.du[i] * f.du[i];
  if (!(f.norm2 > 0.0)) throw UndefinedFit("cannot fit a soliton to a state with zero gradient");

  const double lo = std::log(1e-3), hi = std::log(1e3);
  constexpr int kScan = 121;
  const double step = (hi - lo) / (kScan - 1);
  double best = std::numeric_limits<double>::infinity();
  int best_sign = 1, best_k = 0;
  for (int sign : {1, -1}) {
    for (int k = 0; k < kScan; ++k) {
      const double j = f(lo + step * k, sign);
      if (j < best) {
        best = j;
        best_sign = sign;
        best_k = k;
      }
    }
  }

  double a = lo + step * std::max(0, best_k - 1);
  double b = lo + step * std::min(kScan - 1, best_k + 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c, best_sign), fd = f(d, best_sign);
  for (int it = 0; it < 60; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c, best_sign);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d, best_sign);
    }
  }
  const double x = 0.5 * (a + b);
  const double j = f(x, best_sign);
  return SolitonFit{std::exp(x), best_sign, std::sqrt(std::max(0.0, j) / f.norm2)};
}

}  // namespace wavecone
