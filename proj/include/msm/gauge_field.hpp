#pragma once

// Gauge potentials A = (A1, A2) and A0 built from field pairs through the
// Biot-Savart kernels G_j and Riesz transforms, realized as Fourier
// multipliers on the torus (zero mode set to 0).
//
//   A_j[u, v] = 2 G_j * Im(u1 conj(v2) + v1 conj(u2))
//   A0[u, v]  = 2 sum_{j,k} R_j R_k Re(u_j conj(v_k) + v_j conj(u_k))
//               + 2 Re(u1 conj(v1) + conj(v2) u2)
//
// With this sign, d1 A2 - d2 A1 = -4 Im(u1 conj(u2)) for A = A[u, u].

#include <cstdint>
#include <span>
#include <vector>

#include "msm/field_pair.hpp"
#include "msm/littlewood_paley.hpp"
#include "msm/ratio_report.hpp"
#include "msm/spectral.hpp"

namespace msm {

struct VectorPotential {
  ComplexField a1;
  ComplexField a2;
};

struct GaugePotential {
  ComplexField a1;
  ComplexField a2;
  ComplexField a0;

  VectorPotential vector() const { return {a1, a2}; }
};

/// G_1(x) = x2 / (2 pi |x|^2), G_2(x) = -x1 / (2 pi |x|^2) on the plane.
double biot_savart_kernel(Axis axis, double x1, double x2);

/// Multiplier of convolution with G_j: -i xi2/|xi|^2 (j = 1), i xi1/|xi|^2 (j = 2).
FourierMultiplier biot_savart_multiplier(const Grid& grid, Axis axis);

ComplexField riesz(const ComplexField& f, Axis axis);

/// Im(u1 conj(v2) + v1 conj(u2)), dealiased.
ComplexField coupling_density(const FieldPair& u, const FieldPair& v);

VectorPotential compute_A(const FieldPair& u, const FieldPair& v);
ComplexField compute_A0(const FieldPair& u, const FieldPair& v);
GaugePotential gauge_potential(const FieldPair& u);
/// The same from the lifted components, sharing their transforms.
GaugePotential gauge_potential(const PaddedField& u1, const PaddedField& u2);

/// A0[u, u] in the closed form 4 sum R_j R_k Re(u_j conj(u_k)) + 2 |u|^2.
ComplexField compute_A0_diagonal(const FieldPair& u);

/// The closed forms A_j = 4 G_j * Im(conj(u1) u2). This is the connection of
/// the frame derived from a map and equals -A[u, u].
VectorPotential compute_A_frame(const FieldPair& u);

enum class CurvatureSign {
  coupling,   ///< d1 A2 - d2 A1 = -4 Im(u1 conj(u2))
  geometric,  ///< d1 A2 - d2 A1 = -4 Im(conj(u1) u2)
};

/// ||d1 a2 - d2 a1 + 4 m||_inf / (1 + ||m||_inf) with m the mean-free part
/// of the density of the chosen sign. Throws std::invalid_argument on a grid
/// mismatch.
double curvature_check(const FieldPair& u, const VectorPotential& a,
                       CurvatureSign sign = CurvatureSign::coupling);

/// ||d1 a1 + d2 a2||_inf / max(||A||_inf, tiny); 0 for the zero potential.
double divergence_check(const VectorPotential& a);

/// max |Im a_j| / max |a_j| over both components.
double reality_defect(const VectorPotential& a);

/// One draw for the gauge estimate surveys: A[f, g] tested against h.
struct GaugeSample {
  FieldPair f;
  FieldPair g;
  ComplexField h;
};

/// Ratio surveys for
///   "A"      ||grad A[f,g]||_inf  vs ||f||_B ||g||_B + ||f||_2 ||g||_2
///   "Abesov" ||A[f,g]||_B         vs the same right side
///   "Abi"    ||A[f,g].grad h||_{H^-1/2}
///              vs (||g||_{H^1/2} ||h||_{H^1/2} + ||g||_B ||h||_B) ||f||_{H^-1/2}
/// with B = B^{1/2}_{q,2}. Throws std::invalid_argument on an empty sample set.
std::vector<RatioReport> survey_gauge_bounds(const DyadicPartition& partition,
                                             std::span<const GaugeSample> samples, double q,
                                             std::uint64_t seed);

}  // namespace msm
