#include <stdexcept>

#include "msm/evolution.hpp"
#include "msm/gauge_field.hpp"

namespace msm {

namespace {

const Complex kI(0.0, 1.0);

// -2 div(a u) for a real vector potential a and a lifted scalar u.
ComplexField transport(const PaddedField& a1, const PaddedField& a2, const PaddedField& u) {
  return -2.0 * (derivative((a1 * u).project(), Axis::x1) + derivative((a2 * u).project(), Axis::x2));
}

// A0 + |A|^2, dealiased.
ComplexField scalar_potential(const ComplexField& a0, const PaddedField& a1,
                              const PaddedField& a2) {
  return a0 + (a1 * a1 + a2 * a2).project();
}

}  // namespace

double mass(const FieldPair& u) {
  const double a = lp_norm(u.u1, 2.0);
  const double b = lp_norm(u.u2, 2.0);
  return a * a + b * b;
}

FieldPair msm_nonlinearity(const FieldPair& u) {
  const auto u1 = PaddedField::lift(u.u1);
  const auto u2 = PaddedField::lift(u.u2);
  const auto a = gauge_potential(u1, u2);
  const auto a1 = PaddedField::lift(a.a1);
  const auto a2 = PaddedField::lift(a.a2);
  const auto v = PaddedField::lift(scalar_potential(a.a0, a1, a2));
  // Im(u1 conj(u2)); cubic_1 = -4 m u2, cubic_2 = 4 m u1.
  const auto m = PaddedField::lift((u1 * u2.conj()).imag_part().project());
  const auto r1 = transport(a1, a2, u1) + ((-kI) * (v * u1) - 4.0 * (m * u2)).project();
  const auto r2 = transport(a1, a2, u2) + ((-kI) * (v * u2) + 4.0 * (m * u1)).project();
  return {r1, r2};
}

FieldPair msm_rhs(const FieldPair& u) {
  const auto n = msm_nonlinearity(u);
  return {kI * laplacian(u.u1) + n.u1, kI * laplacian(u.u2) + n.u2};
}

FieldPair difference_rhs(const FieldPair& u, const FieldPair& v) {
  require_same_grid(u.grid(), v.grid());
  const FieldPair w = u - v;
  const FieldPair s = u + v;

  const auto au = compute_A(u, u);
  const auto av = compute_A(v, v);
  const auto asw = compute_A(s, w);  // A[u+v, w] = A[u,u] - A[v,v]
  const auto a0u = compute_A0(u, u);
  const auto a0sw = compute_A0(s, w);

  const auto au1 = PaddedField::lift(au.a1);
  const auto au2 = PaddedField::lift(au.a2);
  const auto asw1 = PaddedField::lift(asw.a1);
  const auto asw2 = PaddedField::lift(asw.a2);
  const auto sum1 = PaddedField::lift(au.a1 + av.a1);
  const auto sum2 = PaddedField::lift(au.a2 + av.a2);

  const auto vu = PaddedField::lift(scalar_potential(a0u, au1, au2));
  const auto dv = PaddedField::lift(a0sw + (sum1 * asw1 + sum2 * asw2).project());

  const auto lu1 = PaddedField::lift(u.u1), lu2 = PaddedField::lift(u.u2);
  const auto lv1 = PaddedField::lift(v.u1), lv2 = PaddedField::lift(v.u2);
  const auto lw1 = PaddedField::lift(w.u1), lw2 = PaddedField::lift(w.u2);
  const auto ls1 = PaddedField::lift(s.u1), ls2 = PaddedField::lift(s.u2);

  // Differences of the cubic terms, split as in
  // Im(u2 conj(u1)) u2 - Im(v2 conj(v1)) v2
  //   = Im(u2 conj(u1)) w2 + 1/2 Im((u2+v2) conj(w1) + w2 conj(u1+v1)) v2.
  const auto mu = PaddedField::lift((lu2 * lu1.conj()).imag_part().project());
  const auto mc1 = PaddedField::lift((ls2 * lw1.conj() + lw2 * ls1.conj()).imag_part().project());
  const auto mc2 = PaddedField::lift((ls1 * lw2.conj() + lw1 * ls2.conj()).imag_part().project());

  const auto component = [&](const ComplexField& wj, const PaddedField& lwj, const PaddedField& lvj,
                             const ComplexField& vj, const PaddedField& cubic) {
    const auto dvj1 = PaddedField::lift(derivative(vj, Axis::x1));
    const auto dvj2 = PaddedField::lift(derivative(vj, Axis::x2));
    return kI * laplacian(wj) + transport(au1, au2, lwj) +
           (-2.0 * (asw1 * dvj1 + asw2 * dvj2) - kI * (vu * lwj) - kI * (dv * lvj) + cubic).project();
  };
  const auto c1 = 4.0 * (mu * lw2 + 0.5 * (mc1 * lv2));
  const auto c2 = 4.0 * ((-1.0) * (mu * lw1) + 0.5 * (mc2 * lv1));
  return {component(w.u1, lw1, lv1, v.u1, c1), component(w.u2, lw2, lv2, v.u2, c2)};
}

}  // namespace msm
