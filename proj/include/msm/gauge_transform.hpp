#pragma once

// From a sphere-valued map, written in the stereographic coordinate z, to
// the gauged fields u_j = e^{i psi} b_j with b_j = d_j z / (1 + |z|^2).
//
// Pointwise operations (division, phases, the connection) act on grid
// samples; derivatives are spectral.

#include <array>

#include "msm/field_pair.hpp"
#include "msm/gauge_field.hpp"
#include "msm/spectral.hpp"

namespace msm {

/// (2 Re z, 2 Im z, 1 - |z|^2) / (1 + |z|^2).
std::array<double, 3> stereographic(Complex z);

/// b_j = d_j z / (1 + |z|^2).
FieldPair covariant_frame(const ComplexField& z);

/// 2 sum_j d_j Im(conj(b_j) z), the right side of the equation for psi.
ComplexField gauge_source(const ComplexField& z);

/// Mean-zero solution of Laplacian psi = gauge_source(z).
ComplexField solve_psi(const ComplexField& z);

struct GaugeFrame {
  FieldPair b;
  ComplexField psi;
  FieldPair u;
  /// A_j = -d_j psi + 2 Im(conj(b_j) z), including its mean.
  VectorPotential connection;
  /// Mean of the connection. On the torus this constant part is not
  /// reachable by the mean-free Biot-Savart multipliers.
  std::array<double, 2> holonomy;
};

GaugeFrame derive_u(const ComplexField& z);

/// The connection with its mean removed.
VectorPotential mean_free(const VectorPotential& a);

/// i [(d1 + i a1) u1 + (d2 + i a2) u2].
ComplexField u0_from_u(const FieldPair& u, const VectorPotential& a);

/// ||D1 u2 - D2 u1||_inf / (1 + max(||d1 u2||_inf, ||d2 u1||_inf)) with
/// D_j = d_j + i a_j.
double compatibility_residual(const FieldPair& u, const VectorPotential& a);

/// (||a - b||_2^2 summed over components)^{1/2} / ||a||_2 with 0/0 = 0.
double relative_l2_difference(const VectorPotential& a, const VectorPotential& b);

/// 1/2 integral |grad z|^2 / (1 + |z|^2)^2 under the normalized measure.
double energy(const ComplexField& z);

}  // namespace msm
