#pragma once

#include <cmath>

namespace wavecone::detail {

// C-infinity transition: 0 for s <= 0, 1 for s >= 1.
inline double smooth_step(double s) noexcept {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / s);
  const double b = std::exp(-1.0 / (1.0 - s));
  return a / (a + b);
}

// d/ds smooth_step(s).
inline double smooth_step_derivative(double s) noexcept {
  if (s <= 0.0 || s >= 1.0) return 0.0;
  const double a = std::exp(-1.0 / s);
  const double b = std::exp(-1.0 / (1.0 - s));
  const double da = a / (s * s);
  const double db = b / ((1.0 - s) * (1.0 - s));
  return (da * b + a * db) / ((a + b) * (a + b));
}

}  // namespace wavecone::detail
