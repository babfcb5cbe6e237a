#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace wavecone {

/// Uniform radial grid r_i = i * dr, i = 0 .. n-1, with a node at the origin.
class RadialGrid {
 public:
  static constexpr std::size_t kMinNodes = 16;

  /// Grid with spacing `dr` ending at `r_max`; r_max must be a multiple of dr.
  static RadialGrid from_spacing(double r_max, double dr);
  /// Grid with `n` nodes on [0, r_max].
  static RadialGrid from_nodes(double r_max, std::size_t n);

  double r_max() const noexcept { return r_max_; }
  double dr() const noexcept { return dr_; }
  std::size_t size() const noexcept { return n_; }
  double node(std::size_t i) const noexcept { return static_cast<double>(i) * dr_; }
  std::vector<double> nodes() const;

  /// Index of the last node with r_i <= r (clamped to the grid).
  std::size_t floor_index(double r) const noexcept;

  /// Piecewise-linear interpolant of node samples `f` at radius r; zero
  /// outside [0, r_max].
  double interpolate(std::span<const double> f, double r) const noexcept;

  friend bool operator==(const RadialGrid&, const RadialGrid&) = default;

 private:
  RadialGrid(double r_max, double dr, std::size_t n) : r_max_(r_max), dr_(dr), n_(n) {}

  double r_max_;
  double dr_;
  std::size_t n_;
};

/// Samples a function of r on every node of the grid.
std::vector<double> sample(const RadialGrid& grid, const std::function<double(double)>& f);

}  // namespace wavecone
