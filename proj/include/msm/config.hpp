#pragma once

// Experiment configuration: an INI-style file with the sections [grid],
// [time], [ensemble] and [experiment]. Unknown sections or keys are errors.
//
//   [grid]        n, length (a number, optionally with a "pi" suffix)
//   [time]        dt, T, stride, snapshot_stride
//   [ensemble]    count, seed, amplitude, decay, bandwidth
//   [experiment]  id, s, q, delta (comma separated), epsilon, draws, input

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "msm/spectral.hpp"

namespace msm {

struct ExperimentConfig {
  std::size_t n = 64;
  double length = 16.0 * std::numbers::pi;

  double dt = 1e-3;
  double horizon = 1.0;
  std::size_t stride = 10;
  std::size_t snapshot_stride = 0;

  std::size_t count = 200;
  std::uint64_t seed = 1;
  double amplitude = 0.5;
  /// Random coefficients decay like (1 + |xi|^2)^{-(1 + decay)/2}.
  double decay = 1.0;
  /// Largest |xi| carrying random coefficients.
  double bandwidth = 2.0;

  std::string id = "simulate";
  double s = 1.0;
  double q = 6.0;
  std::vector<double> deltas{1e-4};
  double epsilon = 0.05;
  std::size_t draws = 1;
  std::string input;

  Grid grid() const { return Grid(n, length); }
  std::size_t steps() const;
  /// Regularity at or below 3/4 runs, but outside the theorem's range.
  bool out_of_theorem() const { return s <= 0.75; }
};

/// Throws std::invalid_argument when q <= 4, the grid is invalid, or a
/// time or ensemble parameter is out of range.
void validate(const ExperimentConfig& config);

/// Throws std::invalid_argument on syntax errors, unknown keys or bad
/// values. The result is validated.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Canonical text form; parse_config(to_ini(c)) reproduces c.
std::string to_ini(const ExperimentConfig& config);

/// FNV-1a 64 of to_ini, as 16 hex digits.
std::string config_hash(const ExperimentConfig& config);

/// Parses a length such as "6.283", "2pi" or "16pi".
double parse_length(const std::string& text);

}  // namespace msm
