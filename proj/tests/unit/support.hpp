#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "msm/field_pair.hpp"
#include "msm/spectral.hpp"

namespace testing {

inline constexpr double kPi = std::numbers::pi;

/// Band-limited field with Gaussian coefficients on modes |k_i| <= band
/// (in mode units), no Nyquist content.
inline msm::ComplexField smooth_field(const msm::Grid& grid, std::uint64_t seed, long band = 5,
                                      double scale = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<msm::Complex> spec(grid.size(), 0.0);
  for (std::size_t k1 = 0; k1 < grid.n(); ++k1) {
    for (std::size_t k2 = 0; k2 < grid.n(); ++k2) {
      const long m1 = grid.mode(k1), m2 = grid.mode(k2);
      const double a = normal(rng), b = normal(rng);
      if (std::abs(m1) > band || std::abs(m2) > band) continue;
      if (grid.is_nyquist(k1) || grid.is_nyquist(k2)) continue;
      const double decay = std::exp(-0.15 * static_cast<double>(m1 * m1 + m2 * m2));
      spec[grid.index(k1, k2)] = scale * decay * msm::Complex(a, b);
    }
  }
  return msm::ComplexField::from_spectrum(grid, std::move(spec));
}

inline msm::ComplexField smooth_real(const msm::Grid& grid, std::uint64_t seed, long band = 5,
                                     double scale = 1.0) {
  return smooth_field(grid, seed, band, scale).real_part();
}

inline msm::FieldPair smooth_pair(const msm::Grid& grid, std::uint64_t seed, long band = 5,
                                  double scale = 1.0) {
  return {smooth_field(grid, 2 * seed + 11, band, scale), smooth_field(grid, 2 * seed + 12, band, scale)};
}

inline msm::ComplexField plane_wave(const msm::Grid& grid, double k1, double k2,
                                    msm::Complex amplitude = 1.0) {
  return msm::ComplexField::from_function(grid, [=](double x1, double x2) {
    return amplitude * std::polar(1.0, k1 * x1 + k2 * x2);
  });
}

inline double max_difference(const msm::ComplexField& a, const msm::ComplexField& b) {
  return msm::max_abs(a - b);
}

}  // namespace testing
