#pragma once

// Seeded random test data. Every draw is addressed by (seed, stream, index),
// so ensembles can be generated in any order or in parallel and larger
// ensembles extend smaller ones.

#include <cstdint>

#include "msm/field_pair.hpp"
#include "msm/spectral.hpp"

namespace msm {

struct SpectralProfile {
  /// L^2 norm (root mean square) of the result.
  double amplitude = 1.0;
  /// Coefficient magnitudes follow (1 + |xi|^2)^{-(1 + decay)/2}.
  double decay = 1.0;
  /// Only 0 < |xi| <= bandwidth below the Nyquist mode carry coefficients.
  double bandwidth = 2.0;
};

/// Seed for draw `index` of `stream`, mixed with splitmix64.
std::uint64_t draw_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Complex mean-zero field with the given profile and independent uniform
/// phases.
ComplexField random_scalar(const Grid& grid, const SpectralProfile& profile, std::uint64_t seed);

/// Real mean-zero field (real part of a random scalar, rescaled).
ComplexField random_real(const Grid& grid, const SpectralProfile& profile, std::uint64_t seed);

/// Pair whose joint L^2 norm is the profile amplitude.
FieldPair random_pair(const Grid& grid, const SpectralProfile& profile, std::uint64_t seed);

/// Stereographic map z = z0 + random scalar, bounded by construction of the
/// grid. z0 shifts the map away from the base point.
ComplexField random_map(const Grid& grid, const SpectralProfile& profile, std::uint64_t seed,
                        Complex z0 = 0.0);

}  // namespace msm
