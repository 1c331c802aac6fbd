#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "msm/gauge_field.hpp"

namespace msm {

std::vector<RatioReport> survey_gauge_bounds(const DyadicPartition& partition,
                                             std::span<const GaugeSample> samples, double q,
                                             std::uint64_t seed) {
  if (samples.empty()) throw std::invalid_argument("gauge survey needs at least one sample");
  const auto besov = [&](const ComplexField& f) { return besov_norm(partition, f, 0.5, q, 2.0); };
  const auto l2 = [](const ComplexField& f) { return lp_norm(f, 2.0); };
  const auto h = [](double s) { return [s](const ComplexField& f) { return sobolev_norm(f, s); }; };

  std::vector<double> grad_ratios, besov_ratios, bilinear_ratios;
  for (const auto& sample : samples) {
    const auto a = compute_A(sample.f, sample.g);
    const double fb = pair_norm(sample.f, besov);
    const double gb = pair_norm(sample.g, besov);
    const double rhs = fb * gb + pair_norm(sample.f, l2) * pair_norm(sample.g, l2);
    grad_ratios.push_back(safe_ratio(jacobian_sup(a.a1, a.a2), rhs));
    const double ab = std::hypot(besov(a.a1), besov(a.a2));
    besov_ratios.push_back(safe_ratio(ab, rhs));

    const auto a1 = PaddedField::lift(a.a1);
    const auto a2 = PaddedField::lift(a.a2);
    const auto dh1 = PaddedField::lift(derivative(sample.h, Axis::x1));
    const auto dh2 = PaddedField::lift(derivative(sample.h, Axis::x2));
    const auto transport = (a1 * dh1 + a2 * dh2).project();
    const double lhs = sobolev_norm(transport, -0.5);
    const double right = (pair_norm(sample.g, h(0.5)) * sobolev_norm(sample.h, 0.5) +
                          gb * besov(sample.h)) *
                         pair_norm(sample.f, h(-0.5));
    bilinear_ratios.push_back(safe_ratio(lhs, right));
  }
  return {make_ratio_report("A", q, grad_ratios, seed),
          make_ratio_report("Abesov", q, besov_ratios, seed),
          make_ratio_report("Abi", q, bilinear_ratios, seed)};
}

}  // namespace msm
