#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>

#include "msm/littlewood_paley.hpp"

namespace msm {
namespace {

double smooth_rise(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

}  // namespace

double cutoff_profile(double r) {
  if (r <= 1.0) return 1.0;
  if (r >= 1.25) return 0.0;
  const double t = 4.0 * (1.25 - r);  // 1 at r = 1, 0 at r = 5/4
  const double a = smooth_rise(t);
  return a / (a + smooth_rise(1.0 - t));
}

double block_symbol(int j, double r) {
  if (j < 0) return 0.0;
  if (j == 0) return cutoff_profile(r);
  return cutoff_profile(std::ldexp(r, -j)) - cutoff_profile(std::ldexp(r, 1 - j));
}

DyadicPartition::DyadicPartition(const Grid& grid) : grid_(grid), max_block_(0) {
  const double top = grid.max_wavenumber();
  while (std::ldexp(1.0, max_block_) < top) ++max_block_;
  auto single = std::make_shared<std::vector<FourierMultiplier>>();
  for (int j = 0; j <= max_block_; ++j) {
    single->emplace_back(
        grid_, [j](double xi1, double xi2) { return Complex(block_symbol(j, std::hypot(xi1, xi2))); },
        block_symbol(j, 0.0));
  }
  single_ = std::move(single);
}

FourierMultiplier DyadicPartition::symbol(int j, BlockKind kind) const {
  if (j < 0 || j > max_block_) {
    throw std::out_of_range("block index " + std::to_string(j) + " outside [0, " +
                            std::to_string(max_block_) + "]");
  }
  if (kind == BlockKind::single) return (*single_)[static_cast<std::size_t>(j)];
  auto radial = [j, kind](double r) {
    switch (kind) {
      case BlockKind::single:
        return block_symbol(j, r);
      case BlockKind::cumulative: {
        double sum = 0.0;
        for (int l = 0; l <= j; ++l) sum += block_symbol(l, r);
        return sum;
      }
      case BlockKind::tilde:
        return block_symbol(j - 1, r) + block_symbol(j, r) + block_symbol(j + 1, r);
    }
    return 0.0;
  };
  return FourierMultiplier(
      grid_, [&radial](double xi1, double xi2) { return Complex(radial(std::hypot(xi1, xi2))); },
      radial(0.0));
}

ComplexField block_project(const DyadicPartition& partition, const ComplexField& f, int j,
                           BlockKind kind) {
  require_same_grid(partition.grid(), f.grid());
  return apply_multiplier(f, partition.symbol(j, kind));
}

BlockDecomposition decompose(const DyadicPartition& partition, const ComplexField& f) {
  BlockDecomposition out{f, {}};
  out.pieces.reserve(partition.max_block() + 1);
  for (int j = 0; j <= partition.max_block(); ++j) {
    out.pieces.push_back(block_project(partition, f, j, BlockKind::single));
  }
  return out;
}

ComplexField BlockDecomposition::reconstruct() const {
  std::vector<Complex> ones(pieces.size(), 1.0);
  return linear_combination(ones, pieces);
}

}  // namespace msm
