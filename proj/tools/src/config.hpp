#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "wavecone/dimension.hpp"
#include "wavecone/nonlinear.hpp"
#include "wavecone/state.hpp"

namespace wavecone::cli {

struct DataSpec {
  std::string kind = "zero";  // zero | bump | ground_state | csv
  double amplitude = 1.0;
  double velocity = 0.0;  // bump: amplitude of d_t u
  double center = 1.5;
  double width = 1.0;
  double a = 1.0;  // ground_state: a * W_lambda
  double lambda = 1.0;
  std::filesystem::path file;
};

struct ExperimentConfig {
  int dimension = 3;
  double T = 10.0;

  double r_max = 0.0;  // 0: sized from the data and T
  double dr = 1.0 / 128;

  double cfl = 0.5;
  double theta = 1e6;
  std::size_t stride = 16;

  DataSpec data;

  std::vector<double> A = {0.0};
  double alpha = 2.0;
  double center_offset = 0.0;
  double eta_min = -4.0;
  double eta_max = 4.0;
  std::vector<double> ell = {0.0, 0.5, 0.9};
  std::size_t samples = 1000000;
  std::size_t snapshot_nodes = 8;  // node stride of snapshots.csv

  std::uint64_t seed = 42;

  Dimension dim() const { return Dimension(dimension); }
  SchemeOptions scheme() const;
  /// Initial data on the configured grid.
  RadialState initial_state() const;
  /// Grid radius actually used: r_max, or enough room for the data and T.
  double grid_radius() const;
};

/// Parses an INI file; throws ConfigError on unknown keys or bad values.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Raw bytes of a file, for hashing.
std::string read_file(const std::filesystem::path& path);

}  // namespace wavecone::cli
