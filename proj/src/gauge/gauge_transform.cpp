#include "msm/gauge_transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace msm {

namespace {

template <typename F>
ComplexField pointwise(const Grid& grid, std::size_t count, F&& f) {
  std::vector<Complex> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
  return ComplexField::from_samples(grid, std::move(out));
}

ComplexField collocation_product(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a.grid(), b.grid());
  const auto x = a.samples();
  const auto y = b.samples();
  return pointwise(a.grid(), x.size(), [&](std::size_t i) { return x[i] * y[i]; });
}

// 2 Im(conj(b) z), sample by sample.
ComplexField twisted_density(const ComplexField& b, const ComplexField& z) {
  const auto bs = b.samples();
  const auto zs = z.samples();
  return pointwise(z.grid(), zs.size(),
                   [&](std::size_t i) { return Complex(2.0 * (std::conj(bs[i]) * zs[i]).imag()); });
}

}  // namespace

std::array<double, 3> stereographic(Complex z) {
  const double r2 = std::norm(z);
  const double d = 1.0 + r2;
  return {2.0 * z.real() / d, 2.0 * z.imag() / d, (1.0 - r2) / d};
}

FieldPair covariant_frame(const ComplexField& z) {
  const Grid& g = z.grid();
  const auto zs = z.samples();
  const auto frame = [&](Axis axis) {
    const auto dz = derivative(z, axis);
    const auto d = dz.samples();
    return pointwise(g, zs.size(), [&](std::size_t i) { return d[i] / (1.0 + std::norm(zs[i])); });
  };
  return {frame(Axis::x1), frame(Axis::x2)};
}

ComplexField gauge_source(const ComplexField& z) {
  const auto b = covariant_frame(z);
  return derivative(twisted_density(b.u1, z), Axis::x1) +
         derivative(twisted_density(b.u2, z), Axis::x2);
}

ComplexField solve_psi(const ComplexField& z) {
  return apply_multiplier(gauge_source(z), FourierMultiplier::inverse_laplacian(z.grid())).real_part();
}

GaugeFrame derive_u(const ComplexField& z) {
  const Grid& g = z.grid();
  auto b = covariant_frame(z);
  auto psi = solve_psi(z);
  const auto ps = psi.samples();
  const auto phase =
      pointwise(g, ps.size(), [&](std::size_t i) { return std::polar(1.0, ps[i].real()); });
  FieldPair u{collocation_product(phase, b.u1), collocation_product(phase, b.u2)};
  VectorPotential a{(twisted_density(b.u1, z) - derivative(psi, Axis::x1)).real_part(),
                    (twisted_density(b.u2, z) - derivative(psi, Axis::x2)).real_part()};
  std::array<double, 2> holonomy{a.a1.mean().real(), a.a2.mean().real()};
  return {std::move(b), std::move(psi), std::move(u), std::move(a), holonomy};
}

VectorPotential mean_free(const VectorPotential& a) {
  const Grid& g = a.a1.grid();
  return {a.a1 - ComplexField::constant(g, a.a1.mean()),
          a.a2 - ComplexField::constant(g, a.a2.mean())};
}

ComplexField u0_from_u(const FieldPair& u, const VectorPotential& a) {
  const Complex i(0.0, 1.0);
  const auto d1 = derivative(u.u1, Axis::x1) + i * collocation_product(a.a1, u.u1);
  const auto d2 = derivative(u.u2, Axis::x2) + i * collocation_product(a.a2, u.u2);
  return i * (d1 + d2);
}

double compatibility_residual(const FieldPair& u, const VectorPotential& a) {
  const Complex i(0.0, 1.0);
  const auto p12 = derivative(u.u2, Axis::x1);
  const auto p21 = derivative(u.u1, Axis::x2);
  const auto residual = (p12 + i * collocation_product(a.a1, u.u2)) -
                        (p21 + i * collocation_product(a.a2, u.u1));
  return max_abs(residual) / (1.0 + std::max(max_abs(p12), max_abs(p21)));
}

double relative_l2_difference(const VectorPotential& a, const VectorPotential& b) {
  const double diff = std::hypot(lp_norm(a.a1 - b.a1, 2.0), lp_norm(a.a2 - b.a2, 2.0));
  const double scale = std::hypot(lp_norm(a.a1, 2.0), lp_norm(a.a2, 2.0));
  if (scale == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return diff / scale;
}

double energy(const ComplexField& z) {
  const auto zs = z.samples();
  const auto dz1 = derivative(z, Axis::x1);
  const auto dz2 = derivative(z, Axis::x2);
  const auto d1 = dz1.samples();
  const auto d2 = dz2.samples();
  double sum = 0.0;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const double d = 1.0 + std::norm(zs[i]);
    sum += (std::norm(d1[i]) + std::norm(d2[i])) / (d * d);
  }
  return 0.5 * sum / static_cast<double>(zs.size());
}

}  // namespace msm
