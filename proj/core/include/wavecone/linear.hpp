#pragma once

#include <functional>
#include <span>
#include <vector>

#include "wavecone/dimension.hpp"
#include "wavecone/state.hpp"
#include "wavecone/stepper.hpp"

namespace wavecone {

inline constexpr double kDefaultCfl = 0.5;

/// How the outer boundary is treated.
enum class BoundaryPolicy {
  /// Data must stay clear of r_max for the whole run (finite speed of
  /// propagation makes the boundary irrelevant); violations throw.
  causal,
  /// The outer node is held at its initial value; no window check. Results
  /// are exact only inside r <= r_max - |t|.
  frozen,
};

enum class LinearMethod { exact_3d, numeric };

/// A free wave (d_t^2 - Delta) v = 0 with Cauchy data at t = data.t.
struct LinearEvolution {
  RadialState data;
  Dimension dim{3};
  LinearMethod method = LinearMethod::numeric;
  double cfl = kDefaultCfl;
  BoundaryPolicy boundary = BoundaryPolicy::causal;

  /// Throws ConfigError when the method does not apply.
  void validate() const;

  /// Solution at absolute time t.
  RadialState at(double t) const;
};

/// Exact N = 3 propagator via d'Alembert's formula for r*u (odd extension).
/// Advances the data by `t` (which may be negative).
RadialState evolve_linear_exact_3d(const RadialState& data, double t);

/// Leapfrog propagator for N = 3, 4, 5. Advances the data by `t`.
RadialState evolve_linear_numeric(const RadialState& data, double t, Dimension dim,
                                  double cfl = kDefaultCfl,
                                  BoundaryPolicy boundary = BoundaryPolicy::causal);

/// Source term f(t, r_i) written into `out` (arrives zeroed) at absolute time t.
using Source = std::function<void(double t, std::span<double> out)>;

/// (d_t^2 - Delta) u = f with the given data, advanced by `t`. With an empty
/// or identically zero source this reproduces evolve_linear_numeric.
RadialState solve_inhomogeneous(const RadialState& data, const Source& source, double t,
                                Dimension dim, double cfl = kDefaultCfl,
                                BoundaryPolicy boundary = BoundaryPolicy::causal);

/// Tabulated source: samples at increasing times, linearly interpolated in
/// time and zero outside [times.front(), times.back()].
class TabulatedSource {
 public:
  TabulatedSource(std::vector<double> times, std::vector<std::vector<double>> samples);
  void operator()(double t, std::span<double> out) const;

 private:
  std::vector<double> times_;
  std::vector<std::vector<double>> samples_;
};

/// Recovers u(0) of an even function from u(dr), u(2dr).
inline double even_origin_value(double u1, double u2) noexcept { return (4.0 * u1 - u2) / 3.0; }

/// Throws unless data supported in r <= M satisfy M + |t| + margin <= r_max.
void check_causal_window(const RadialState& data, double t, double margin);

}  // namespace wavecone
