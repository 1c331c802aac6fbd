#include "msm/random_field.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace msm {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

ComplexField rescaled(const ComplexField& f, double amplitude) {
  const double norm = lp_norm(f, 2.0);
  if (norm == 0.0 || amplitude == 0.0) return ComplexField::zeros(f.grid());
  return (amplitude / norm) * f;
}

}  // namespace

std::uint64_t draw_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
}

ComplexField random_scalar(const Grid& grid, const SpectralProfile& profile, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::vector<Complex> spectrum(grid.size(), 0.0);
  for (std::size_t k1 = 0; k1 < grid.n(); ++k1) {
    for (std::size_t k2 = 0; k2 < grid.n(); ++k2) {
      // Draw for every slot so the phase sequence does not depend on the
      // profile.
      const double theta = phase(rng);
      if (grid.is_nyquist(k1) || grid.is_nyquist(k2) || (k1 == 0 && k2 == 0)) continue;
      const double xi2 = std::pow(grid.wavenumber(k1), 2) + std::pow(grid.wavenumber(k2), 2);
      if (xi2 > profile.bandwidth * profile.bandwidth) continue;
      spectrum[grid.index(k1, k2)] = std::polar(std::pow(1.0 + xi2, -0.5 * (1.0 + profile.decay)), theta);
    }
  }
  return rescaled(ComplexField::from_spectrum(grid, std::move(spectrum)), profile.amplitude);
}

ComplexField random_real(const Grid& grid, const SpectralProfile& profile, std::uint64_t seed) {
  return rescaled(random_scalar(grid, profile, seed).real_part(), profile.amplitude);
}

FieldPair random_pair(const Grid& grid, const SpectralProfile& profile, std::uint64_t seed) {
  SpectralProfile unit = profile;
  unit.amplitude = 1.0;
  FieldPair u{random_scalar(grid, unit, splitmix64(seed ^ 1)), random_scalar(grid, unit, splitmix64(seed ^ 2))};
  const double norm = std::hypot(lp_norm(u.u1, 2.0), lp_norm(u.u2, 2.0));
  if (profile.amplitude == 0.0 || norm == 0.0) return zero_pair(grid);
  return (profile.amplitude / norm) * u;
}

ComplexField random_map(const Grid& grid, const SpectralProfile& profile, std::uint64_t seed,
                        Complex z0) {
  return ComplexField::constant(grid, z0) + random_scalar(grid, profile, seed);
}

}  // namespace msm
