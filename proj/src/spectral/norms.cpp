#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "msm/spectral.hpp"

namespace msm {

double sobolev_norm(const ComplexField& f, double s) {
  const Grid& g = f.grid();
  const auto spec = f.spectrum();
  double sum = 0.0;
  for (std::size_t k1 = 0; k1 < g.n(); ++k1) {
    const double a = g.wavenumber(k1);
    for (std::size_t k2 = 0; k2 < g.n(); ++k2) {
      const double b = g.wavenumber(k2);
      sum += std::pow(1.0 + a * a + b * b, s) * std::norm(spec[g.index(k1, k2)]);
    }
  }
  return std::sqrt(sum);
}

double max_abs(const ComplexField& f) {
  double m = 0.0;
  for (const auto& v : f.samples()) m = std::max(m, std::abs(v));
  return m;
}

double jacobian_sup(const ComplexField& v1, const ComplexField& v2) {
  const ComplexField parts[] = {derivative(v1, Axis::x1), derivative(v1, Axis::x2),
                                derivative(v2, Axis::x1), derivative(v2, Axis::x2)};
  double m = 0.0;
  for (std::size_t i = 0; i < v1.grid().size(); ++i) {
    double sum = 0.0;
    for (const auto& d : parts) sum += std::norm(d.samples()[i]);
    m = std::max(m, std::sqrt(sum));
  }
  return m;
}

double lp_norm(const ComplexField& f, double p) {
  if (std::isinf(p)) return max_abs(f);
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm requires p >= 1");
  const auto s = f.samples();
  if (p == 2.0) {
    double sum = 0.0;
    for (const auto& v : s) sum += std::norm(v);
    return std::sqrt(sum / static_cast<double>(s.size()));
  }
  // Scale by the maximum so that large p does not overflow.
  const double m = max_abs(f);
  if (m == 0.0) return 0.0;
  double sum = 0.0;
  for (const auto& v : s) sum += std::pow(std::abs(v) / m, p);
  return m * std::pow(sum / static_cast<double>(s.size()), 1.0 / p);
}

double coefficient_norm(const ComplexField& f) {
  double sum = 0.0;
  for (const auto& c : f.spectrum()) sum += std::norm(c);
  return std::sqrt(sum);
}

Complex inner_product(const ComplexField& f, const ComplexField& g) {
  require_same_grid(f.grid(), g.grid());
  const auto a = f.spectrum();
  const auto b = g.spectrum();
  Complex sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * std::conj(b[i]);
  return sum;
}

}  // namespace msm
