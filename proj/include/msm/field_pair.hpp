#pragma once

#include <cmath>
#include <utility>

#include "msm/spectral.hpp"

namespace msm {

/// The two components (u1, u2) of the system's unknown.
struct FieldPair {
  ComplexField u1;
  ComplexField u2;

  const Grid& grid() const noexcept { return u1.grid(); }
  FieldPair conj() const { return {u1.conj(), u2.conj()}; }

  friend FieldPair operator+(const FieldPair& a, const FieldPair& b) { return {a.u1 + b.u1, a.u2 + b.u2}; }
  friend FieldPair operator-(const FieldPair& a, const FieldPair& b) { return {a.u1 - b.u1, a.u2 - b.u2}; }
  friend FieldPair operator*(Complex c, const FieldPair& a) { return {c * a.u1, c * a.u2}; }
};

inline FieldPair zero_pair(const Grid& grid) {
  return {ComplexField::zeros(grid), ComplexField::zeros(grid)};
}

/// (||u1||^2 + ||u2||^2)^{1/2} for any scalar norm.
template <typename Norm>
double pair_norm(const FieldPair& u, Norm&& norm) {
  const double a = norm(u.u1);
  const double b = norm(u.u2);
  return std::sqrt(a * a + b * b);
}

}  // namespace msm
