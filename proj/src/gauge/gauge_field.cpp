#include "msm/gauge_field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace msm {

double biot_savart_kernel(Axis axis, double x1, double x2) {
  const double r2 = x1 * x1 + x2 * x2;
  if (r2 == 0.0) throw std::domain_error("kernel is singular at the origin");
  const double scale = 1.0 / (2.0 * std::numbers::pi * r2);
  return axis == Axis::x1 ? scale * x2 : -scale * x1;
}

FourierMultiplier biot_savart_multiplier(const Grid& grid, Axis axis) {
  return {grid,
          [axis](double xi1, double xi2) {
            const double r2 = xi1 * xi1 + xi2 * xi2;
            return axis == Axis::x1 ? Complex(0.0, -xi2 / r2) : Complex(0.0, xi1 / r2);
          },
          0.0};
}

ComplexField riesz(const ComplexField& f, Axis axis) {
  return apply_multiplier(f, FourierMultiplier::riesz(f.grid(), axis));
}

ComplexField coupling_density(const FieldPair& u, const FieldPair& v) {
  require_same_grid(u.grid(), v.grid());
  const auto u1 = PaddedField::lift(u.u1);
  const auto u2 = PaddedField::lift(u.u2);
  const auto v1 = PaddedField::lift(v.u1);
  const auto v2 = PaddedField::lift(v.u2);
  return (u1 * v2.conj() + v1 * u2.conj()).imag_part().project();
}

VectorPotential compute_A(const FieldPair& u, const FieldPair& v) {
  const auto m = coupling_density(u, v);
  const Grid& g = m.grid();
  return {apply_multiplier(2.0 * m, biot_savart_multiplier(g, Axis::x1)),
          apply_multiplier(2.0 * m, biot_savart_multiplier(g, Axis::x2))};
}

namespace {

// sum_{j,k} R_j R_k applied to the symmetric real matrix density rho_jk has
// symbol -(xi_j xi_k)/|xi|^2 per entry.
ComplexField double_riesz_sum(const ComplexField& r11, const ComplexField& r12,
                              const ComplexField& r22) {
  const Grid& g = r11.grid();
  const auto a = r11.spectrum();
  const auto b = r12.spectrum();
  const auto c = r22.spectrum();
  std::vector<Complex> out(g.size(), 0.0);
  for (std::size_t k1 = 0; k1 < g.n(); ++k1) {
    const double x1 = g.wavenumber(k1);
    for (std::size_t k2 = 0; k2 < g.n(); ++k2) {
      const auto i = g.index(k1, k2);
      if (i == 0) continue;
      const double x2 = g.wavenumber(k2);
      const double r2 = x1 * x1 + x2 * x2;
      out[i] = -(x1 * x1 * a[i] + 2.0 * x1 * x2 * b[i] + x2 * x2 * c[i]) / r2;
    }
  }
  return ComplexField::from_spectrum(g, std::move(out));
}

}  // namespace

ComplexField compute_A0(const FieldPair& u, const FieldPair& v) {
  require_same_grid(u.grid(), v.grid());
  const auto u1 = PaddedField::lift(u.u1);
  const auto u2 = PaddedField::lift(u.u2);
  const auto v1 = PaddedField::lift(v.u1);
  const auto v2 = PaddedField::lift(v.u2);
  // rho_jk = Re(u_j conj(v_k) + v_j conj(u_k)); rho_12 = rho_21.
  const auto r11 = (u1 * v1.conj() + v1 * u1.conj()).real_part().project();
  const auto r12 = (u1 * v2.conj() + v1 * u2.conj()).real_part().project();
  const auto r22 = (u2 * v2.conj() + v2 * u2.conj()).real_part().project();
  const auto local = (u1 * v1.conj() + v2.conj() * u2).real_part().project();
  return 2.0 * double_riesz_sum(r11, r12, r22) + 2.0 * local;
}

ComplexField compute_A0_diagonal(const FieldPair& u) {
  const Grid& g = u.grid();
  const auto u1 = PaddedField::lift(u.u1);
  const auto u2 = PaddedField::lift(u.u2);
  const auto p11 = (u1 * u1.conj()).real_part().project();
  const auto p12 = (u1 * u2.conj()).real_part().project();
  const auto p22 = (u2 * u2.conj()).real_part().project();
  // Written term by term as 4 sum R_j R_k Re(u_j conj(u_k)) + 2|u|^2.
  ComplexField sum = ComplexField::zeros(g);
  const ComplexField* rho[2][2] = {{&p11, &p12}, {&p12, &p22}};
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      const auto axis_j = j == 0 ? Axis::x1 : Axis::x2;
      const auto axis_k = k == 0 ? Axis::x1 : Axis::x2;
      sum = sum + riesz(riesz(*rho[j][k], axis_k), axis_j);
    }
  }
  return 4.0 * sum + 2.0 * (p11 + p22);
}

GaugePotential gauge_potential(const FieldPair& u) {
  return gauge_potential(PaddedField::lift(u.u1), PaddedField::lift(u.u2));
}

GaugePotential gauge_potential(const PaddedField& u1, const PaddedField& u2) {
  const Grid& g = u1.base_grid();
  const Complex i(0.0, 1.0);
  const auto c = (u1 * u2.conj()).project();
  // |u1|^2 + i |u2|^2 projects to P|u1|^2 + i P|u2|^2, both real.
  const auto moduli = (u1 * u1.conj() + i * (u2 * u2.conj())).project();
  const auto p11 = moduli.real_part();
  const auto p22 = moduli.imag_part();
  const auto m = c.imag_part();
  const auto p12 = c.real_part();
  auto a1 = apply_multiplier(4.0 * m, biot_savart_multiplier(g, Axis::x1));
  auto a2 = apply_multiplier(4.0 * m, biot_savart_multiplier(g, Axis::x2));
  auto a0 = 4.0 * double_riesz_sum(p11, p12, p22) + 2.0 * (p11 + p22);
  return {std::move(a1), std::move(a2), std::move(a0)};
}

VectorPotential compute_A_frame(const FieldPair& u) {
  const auto m = (PaddedField::lift(u.u1).conj() * PaddedField::lift(u.u2)).imag_part().project();
  const Grid& g = m.grid();
  return {apply_multiplier(4.0 * m, biot_savart_multiplier(g, Axis::x1)),
          apply_multiplier(4.0 * m, biot_savart_multiplier(g, Axis::x2))};
}

double curvature_check(const FieldPair& u, const VectorPotential& a, CurvatureSign sign) {
  require_same_grid(u.grid(), a.a1.grid());
  require_same_grid(u.grid(), a.a2.grid());
  const auto u1 = PaddedField::lift(u.u1);
  const auto u2 = PaddedField::lift(u.u2);
  const auto density = sign == CurvatureSign::coupling ? (u1 * u2.conj()).imag_part().project()
                                                       : (u1.conj() * u2).imag_part().project();
  // A curl on the torus has zero mean, so only the mean-free density can match.
  const auto m = density - ComplexField::constant(density.grid(), density.mean());
  const auto curl = derivative(a.a2, Axis::x1) - derivative(a.a1, Axis::x2);
  return max_abs(curl + 4.0 * m) / (1.0 + max_abs(m));
}

double divergence_check(const VectorPotential& a) {
  const double scale = std::max(max_abs(a.a1), max_abs(a.a2));
  if (scale == 0.0) return 0.0;
  const auto div = derivative(a.a1, Axis::x1) + derivative(a.a2, Axis::x2);
  return max_abs(div) / scale;
}

double reality_defect(const VectorPotential& a) {
  const double scale = std::max(max_abs(a.a1), max_abs(a.a2));
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (const auto* f : {&a.a1, &a.a2}) {
    for (const auto& v : f->samples()) worst = std::max(worst, std::abs(v.imag()));
  }
  return worst / scale;
}

}  // namespace msm
