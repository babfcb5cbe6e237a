#pragma once

#include <array>
#include <span>
#include <vector>

#include "wavecone/dimension.hpp"
#include "wavecone/state.hpp"

namespace wavecone {

/// W(r) = (1 + r^2 / (N(N-2)))^{-(N-2)/2}, the positive stationary solution
/// of -Delta W = W^{(N+2)/(N-2)} with W(0) = 1.
double eval_W(double r, Dimension dim);
/// dW/dr
double eval_W_prime(double r, Dimension dim);

/// (sign * lambda^{-(N-2)/2} W(r / lambda), 0) on the grid.
RadialState ground_state(const RadialGrid& grid, Dimension dim, double amplitude = 1.0,
                         double lambda = 1.0);

/// max_i |Delta_h W + W^{(N+2)/(N-2)}| over interior nodes r <= r_cut, with
/// the standard second-order radial Laplacian
/// u'' + (N-1)/r u' (and N u'' at the origin).
double elliptic_residual(const RadialGrid& grid, Dimension dim, double r_cut);

/// sign * lambda^{-(N-2)/2} W(y / lambda) boosted with velocity ell, |ell| < 1.
struct SolitonSpec {
  double lambda = 1.0;
  int sign = 1;
  std::vector<double> ell;  // empty or length N; empty means at rest

  double speed() const noexcept;
  /// Throws PreconditionError unless lambda > 0, sign = +-1 and |ell| < 1.
  void validate(Dimension dim) const;
};

/// Q_ell(t, x) from the Lorentz transform of the ground state.
double eval_Q_ell(double t, std::span<const double> x, const SolitonSpec& spec, Dimension dim);

/// E(Q_ell(0), d_t Q_ell(0)) by axisymmetric (r, mu) quadrature of the closed
/// formula. Throws AccuracyError when two resolutions disagree by more than 1%.
double soliton_energy(const SolitonSpec& spec, Dimension dim);

/// E(W) = ||grad W||^2 / N, from the closed-form integral.
double ground_state_energy(Dimension dim);

struct SolitonFit {
  double lambda = 1.0;
  int sign = 1;
  /// ||u - fit||_{H^1} / ||u||_{H^1}
  double residual = 0.0;
};

/// Best single-bubble approximation of u(t) in the homogeneous H^1 norm:
/// golden-section search over log lambda in [1e-3, 1e3] for both signs.
SolitonFit fit_soliton(const RadialState& state, Dimension dim);

}  // namespace wavecone
