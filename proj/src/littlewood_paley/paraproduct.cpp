#include <optional>
#include <stdexcept>

#include "msm/littlewood_paley.hpp"

namespace msm {

ComplexField low_high_term(const DyadicPartition& partition, const ComplexField& f,
                           const ComplexField& g, int k) {
  if (k < 2) throw std::out_of_range("low-high terms start at k = 2");
  return pointwise_product(block_project(partition, f, k, BlockKind::single),
                           block_project(partition, g, k - 2, BlockKind::cumulative));
}

ComplexField paraproduct(const DyadicPartition& partition, const ComplexField& f,
                         const ComplexField& g, ParaproductTerm term) {
  require_same_grid(f.grid(), g.grid());
  require_same_grid(partition.grid(), f.grid());
  const int top = partition.max_block();
  // Each term is an exact quadratic product, so they can be summed on the
  // padded grid and projected once.
  std::optional<PaddedField> acc;
  auto add = [&acc](PaddedField p) {
    if (acc) {
      acc = *acc + p;
    } else {
      acc = std::move(p);
    }
  };
  const int first = term == ParaproductTerm::low_high ? 2 : 0;
  for (int k = first; k <= top; ++k) {
    const auto fk = PaddedField::lift(block_project(partition, f, k, BlockKind::single));
    const auto gk = term == ParaproductTerm::low_high
                        ? block_project(partition, g, k - 2, BlockKind::cumulative)
                        : block_project(partition, g, k, BlockKind::tilde);
    add(fk * PaddedField::lift(gk));
  }
  if (!acc) return ComplexField::zeros(f.grid());
  return acc->project();
}

}  // namespace msm
