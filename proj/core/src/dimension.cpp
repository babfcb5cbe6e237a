#include "wavecone/dimension.hpp"

#include <numbers>
#include <string>

#include "wavecone/error.hpp"

namespace wavecone {

Dimension::Dimension(int n) : n_(n) {
  if (n < 3 || n > 5) {
    throw ConfigError("space dimension must be 3, 4 or 5, got " + std::to_string(n));
  }
}

double Dimension::sphere_area() const noexcept {
  constexpr double pi = std::numbers::pi;
  switch (n_) {
    case 3:
      return 4.0 * pi;
    case 4:
      return 2.0 * pi * pi;
    default:
      return 8.0 * pi * pi / 3.0;
  }
}

double Dimension::equator_area() const noexcept {
  constexpr double pi = std::numbers::pi;
  switch (n_) {
    case 3:
      return 2.0 * pi;
    case 4:
      return 4.0 * pi;
    default:
      return 2.0 * pi * pi;
  }
}

}  // namespace wavecone
