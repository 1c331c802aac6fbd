#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "msm/spectral.hpp"

namespace msm {

FourierMultiplier::FourierMultiplier(const Grid& grid, const Symbol& symbol, Complex zero_mode_value)
    : grid_(grid), values_(grid.size()) {
  for (std::size_t k1 = 0; k1 < grid.n(); ++k1) {
    const double xi1 = grid.wavenumber(k1);
    for (std::size_t k2 = 0; k2 < grid.n(); ++k2) {
      values_[grid.index(k1, k2)] = symbol(xi1, grid.wavenumber(k2));
    }
  }
  values_[0] = zero_mode_value;
}

FourierMultiplier FourierMultiplier::identity(const Grid& grid) {
  return FourierMultiplier(grid, std::vector<Complex>(grid.size(), 1.0));
}

FourierMultiplier FourierMultiplier::derivative(const Grid& grid, Axis axis) {
  std::vector<Complex> values(grid.size());
  for (std::size_t k1 = 0; k1 < grid.n(); ++k1) {
    for (std::size_t k2 = 0; k2 < grid.n(); ++k2) {
      const std::size_t k = axis == Axis::x1 ? k1 : k2;
      values[grid.index(k1, k2)] =
          grid.is_nyquist(k) ? Complex(0.0) : Complex(0.0, grid.wavenumber(k));
    }
  }
  return FourierMultiplier(grid, std::move(values));
}

FourierMultiplier FourierMultiplier::riesz(const Grid& grid, Axis axis) {
  return {grid,
          [axis](double xi1, double xi2) {
            return Complex(0.0, (axis == Axis::x1 ? xi1 : xi2) / std::hypot(xi1, xi2));
          },
          0.0};
}

FourierMultiplier FourierMultiplier::inverse_laplacian(const Grid& grid) {
  return {grid, [](double xi1, double xi2) { return Complex(-1.0 / (xi1 * xi1 + xi2 * xi2)); }, 0.0};
}

FourierMultiplier FourierMultiplier::schrodinger_propagator(const Grid& grid, double t) {
  return {grid,
          [t](double xi1, double xi2) { return std::polar(1.0, -t * (xi1 * xi1 + xi2 * xi2)); },
          1.0};
}

FourierMultiplier FourierMultiplier::bessel_potential(const Grid& grid, double s) {
  return {grid,
          [s](double xi1, double xi2) { return Complex(std::pow(1.0 + xi1 * xi1 + xi2 * xi2, 0.5 * s)); },
          1.0};
}

FourierMultiplier operator*(const FourierMultiplier& a, const FourierMultiplier& b) {
  require_same_grid(a.grid_, b.grid_);
  std::vector<Complex> values(a.values_.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = a.values_[i] * b.values_[i];
  return FourierMultiplier(a.grid_, std::move(values));
}

ComplexField apply_multiplier(const ComplexField& f, const FourierMultiplier& m) {
  require_same_grid(f.grid(), m.grid());
  const auto in = f.spectrum();
  const auto sym = m.values();
  std::vector<Complex> out(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = sym[i] * in[i];
  return ComplexField::from_spectrum(f.grid(), std::move(out));
}

ComplexField derivative(const ComplexField& f, Axis axis) {
  const Grid& g = f.grid();
  const auto in = f.spectrum();
  std::vector<Complex> out(in.size());
  for (std::size_t k1 = 0; k1 < g.n(); ++k1) {
    for (std::size_t k2 = 0; k2 < g.n(); ++k2) {
      const std::size_t k = axis == Axis::x1 ? k1 : k2;
      const auto i = g.index(k1, k2);
      out[i] = g.is_nyquist(k) ? Complex(0.0) : Complex(0.0, g.wavenumber(k)) * in[i];
    }
  }
  return ComplexField::from_spectrum(g, std::move(out));
}

ComplexField laplacian(const ComplexField& f) {
  const Grid& g = f.grid();
  const auto in = f.spectrum();
  std::vector<Complex> out(in.size());
  for (std::size_t k1 = 0; k1 < g.n(); ++k1) {
    const double a = g.wavenumber(k1);
    for (std::size_t k2 = 0; k2 < g.n(); ++k2) {
      const double b = g.wavenumber(k2);
      const auto i = g.index(k1, k2);
      out[i] = -(a * a + b * b) * in[i];
    }
  }
  return ComplexField::from_spectrum(g, std::move(out));
}

ComplexField resample(const ComplexField& f, const Grid& target) {
  const Grid& source = f.grid();
  if (source.length() != target.length()) throw std::invalid_argument("resample needs equal lengths");
  const long limit = static_cast<long>(std::min(source.n(), target.n()) / 2);
  const auto slot = [](long mode, std::size_t n) {
    return static_cast<std::size_t>(mode < 0 ? mode + static_cast<long>(n) : mode);
  };
  const auto in = f.spectrum();
  std::vector<Complex> out(target.size(), 0.0);
  for (long m1 = 1 - limit; m1 < limit; ++m1) {
    for (long m2 = 1 - limit; m2 < limit; ++m2) {
      out[target.index(slot(m1, target.n()), slot(m2, target.n()))] =
          in[source.index(slot(m1, source.n()), slot(m2, source.n()))];
    }
  }
  return ComplexField::from_spectrum(target, std::move(out));
}

}  // namespace msm
