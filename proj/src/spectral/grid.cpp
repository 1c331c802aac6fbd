#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "msm/spectral.hpp"

namespace msm {

Grid::Grid(std::size_t n, double length) : n_(n), length_(length) {
  if (n < 8 || (n & (n - 1)) != 0) {
    throw std::invalid_argument("grid size must be a power of two >= 8, got " + std::to_string(n));
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw std::invalid_argument("grid length must be positive and finite");
  }
}

long Grid::mode(std::size_t i) const noexcept {
  const auto half = n_ / 2;
  return i <= half ? static_cast<long>(i) : static_cast<long>(i) - static_cast<long>(n_);
}

double Grid::fundamental() const noexcept { return 2.0 * std::numbers::pi / length_; }

double Grid::wavenumber(std::size_t i) const noexcept {
  return static_cast<double>(mode(i)) * fundamental();
}

double Grid::max_wavenumber() const noexcept {
  return std::sqrt(2.0) * static_cast<double>(n_ / 2) * fundamental();
}

void require_same_grid(const Grid& a, const Grid& b) {
  if (!(a == b)) throw std::invalid_argument("fields live on different grids");
}

}  // namespace msm
