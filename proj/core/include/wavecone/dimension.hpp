#pragma once

#include <cmath>

namespace wavecone {

/// Space dimension N of the energy-critical problem, restricted to 3, 4, 5.
class Dimension {
 public:
  explicit Dimension(int n);

  int value() const noexcept { return n_; }

  /// 4/(N-2): the exponent in |u|^{4/(N-2)} u.
  double nonlinearity_exponent() const noexcept { return 4.0 / (n_ - 2); }
  /// p = 1 + 4/(N-2) = (N+2)/(N-2).
  double power() const noexcept { return 1.0 + nonlinearity_exponent(); }
  /// 2N/(N-2), the critical Sobolev exponent.
  double critical_exponent() const noexcept { return 2.0 * n_ / (n_ - 2); }
  /// 2(N+2)/(N-2), the space-time Lebesgue exponent of S(Omega).
  double strichartz_exponent() const noexcept { return 2.0 * (n_ + 2) / (n_ - 2); }
  /// (N-2)/(2N), the potential energy prefactor.
  double potential_coefficient() const noexcept { return (n_ - 2) / (2.0 * n_); }
  /// (N-1)/2, the radial weight exponent of the radiation field.
  double radiation_weight() const noexcept { return 0.5 * (n_ - 1); }
  /// |S^{N-1}|
  double sphere_area() const noexcept;
  /// |S^{N-2}|, the measure of the sphere orthogonal to an axis.
  double equator_area() const noexcept;

  /// |u|^{4/(N-2)} u
  double nonlinearity(double u) const noexcept {
    switch (n_) {
      case 3: {
        const double u2 = u * u;
        return u2 * u2 * u;
      }
      case 4:
        return u * u * u;
      default:
        return std::copysign(std::pow(std::abs(u), 7.0 / 3.0), u);
    }
  }

  /// |u|^{2N/(N-2)}
  double critical_power(double u) const noexcept {
    switch (n_) {
      case 3: {
        const double u2 = u * u;
        return u2 * u2 * u2;
      }
      case 4: {
        const double u2 = u * u;
        return u2 * u2;
      }
      default:
        return std::pow(std::abs(u), 10.0 / 3.0);
    }
  }

  friend bool operator==(Dimension, Dimension) = default;

 private:
  int n_;
};

}  // namespace wavecone
