#pragma once

// Dyadic (Littlewood-Paley) decomposition on the periodic grid.
//
// phi is the radial cutoff with phi = 1 on [0, 1] and phi = 0 on [5/4, inf),
// joined by the C-infinity step h(t) / (h(t) + h(1 - t)), h(t) = exp(-1/t).
// Block symbols are phi_0 = phi and phi_j(xi) = phi(2^-j xi) - phi(2^{1-j} xi).

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "msm/spectral.hpp"

namespace msm {

double cutoff_profile(double r);

/// phi_j evaluated at radius r. Zero for j < 0.
double block_symbol(int j, double r);

enum class BlockKind { single, cumulative, tilde };

class DyadicPartition {
 public:
  explicit DyadicPartition(const Grid& grid);

  const Grid& grid() const noexcept { return grid_; }
  /// Smallest j with 2^j >= the largest grid wavenumber; every block above
  /// it vanishes on the grid.
  int max_block() const noexcept { return max_block_; }

  /// S^j (single), S_j = sum_{l <= j} S^l (cumulative), or
  /// sum_{l=max(j-1,0)}^{j+1} S^l (tilde). Throws std::out_of_range unless
  /// 0 <= j <= max_block().
  FourierMultiplier symbol(int j, BlockKind kind) const;

 private:
  Grid grid_;
  int max_block_;
  std::shared_ptr<const std::vector<FourierMultiplier>> single_;
};

ComplexField block_project(const DyadicPartition& partition, const ComplexField& f, int j,
                           BlockKind kind = BlockKind::single);

/// The pieces S^0 f, ..., S^{j_max} f of one field.
struct BlockDecomposition {
  ComplexField source;
  std::vector<ComplexField> pieces;

  ComplexField reconstruct() const;
};

BlockDecomposition decompose(const DyadicPartition& partition, const ComplexField& f);

/// (sum_j (2^{sj} ||S^j f||_{L^p})^q)^{1/q}, with the maximum over j when
/// q = infinity.
double besov_norm(const BlockDecomposition& blocks, double s, double p, double q);
double besov_norm(const DyadicPartition& partition, const ComplexField& f, double s, double p,
                  double q);

/// C^s taken as B^s_{inf,inf}. Rejects s outside (0, 2) and s = 1.
double holder_norm(const DyadicPartition& partition, const ComplexField& f, double s);

enum class ParaproductTerm {
  low_high,  ///< sum_{k>=2} S^k f . S_{k-2} g
  resonant,  ///< sum_{k>=0} S^k f . tilde-S^k g
};

ComplexField paraproduct(const DyadicPartition& partition, const ComplexField& f,
                         const ComplexField& g, ParaproductTerm term);

/// The single term S^k f . S_{k-2} g of the low-high paraproduct (k >= 2).
ComplexField low_high_term(const DyadicPartition& partition, const ComplexField& f,
                           const ComplexField& g, int k);

struct InterpolationSides {
  double lhs;
  double rhs;
  double s;
  double q;
};

/// Both sides of ||f||_{B^s_{q,2}} <= ||f||_{B^{s0}_{q0,2}}^{1-theta}
/// ||f||_{B^{s1}_{q1,2}}^theta with s and q interpolated from the endpoints.
InterpolationSides interpolation_check(const DyadicPartition& partition, const ComplexField& f,
                                       double s0, double s1, double q0, double q1, double theta);

struct NormTableRow {
  std::string field_id;
  double s;
  double p;
  double q;
  double value;
};

/// CSV with header field_id,s,p,q,value; infinite exponents print as "inf".
void write_norm_table(std::ostream& out, const std::vector<NormTableRow>& rows);

}  // namespace msm
