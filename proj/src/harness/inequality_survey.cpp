#include <cmath>
#include <limits>
#include <stdexcept>

#include "msm/experiments.hpp"

namespace msm {

namespace {

enum Stream : std::uint64_t { kProductF = 1, kProductG, kGaugeF, kGaugeG, kGaugeH };

}  // namespace

SpectralProfile profile_of(const ExperimentConfig& config) {
  return {config.amplitude, config.decay, config.bandwidth};
}

std::vector<RatioReport> survey_product_bounds(const DyadicPartition& partition,
                                               std::span<const ProductSample> samples, double q,
                                               std::uint64_t seed) {
  if (samples.empty()) throw std::invalid_argument("product survey needs at least one sample");
  const auto besov = [&](const ComplexField& f) { return besov_norm(partition, f, 0.5, q, 2.0); };
  const auto hinf = [&](const ComplexField& f) {
    return besov_norm(partition, f, 0.0, std::numeric_limits<double>::infinity(), 1.0);
  };
  std::vector<std::vector<double>> ratios(5);
  for (const auto& [f, g] : samples) {
    const auto fg = pointwise_product(f, g);
    const double fb = besov(f), gb = besov(g);
    const double f_half = sobolev_norm(f, 0.5), f_minus = sobolev_norm(f, -0.5);
    ratios[0].push_back(safe_ratio(sobolev_norm(fg, 0.5), f_half * gb));
    ratios[1].push_back(safe_ratio(besov(fg), fb * gb));
    ratios[2].push_back(safe_ratio(sobolev_norm(fg, -0.5), f_minus * gb));
    const double lhs4 = std::hypot(sobolev_norm(pointwise_product(f, derivative(g, Axis::x1)), -0.5),
                                   sobolev_norm(pointwise_product(f, derivative(g, Axis::x2)), -0.5));
    ratios[3].push_back(safe_ratio(lhs4, f_half * gb));
    ratios[4].push_back(safe_ratio(besov(fg), fb * hinf(g) + hinf(f) * gb));
  }
  return {make_ratio_report("cal1", q, std::move(ratios[0]), seed),
          make_ratio_report("cal2", q, std::move(ratios[1]), seed),
          make_ratio_report("cal3", q, std::move(ratios[2]), seed),
          make_ratio_report("cal4", q, std::move(ratios[3]), seed),
          make_ratio_report("two", q, std::move(ratios[4]), seed)};
}

std::vector<RatioReport> run_inequality_survey(const ExperimentConfig& config) {
  validate(config);
  if (config.count < 50) throw std::invalid_argument("inequality survey needs at least 50 samples");
  const Grid grid = config.grid();
  const DyadicPartition partition(grid);
  const auto profile = profile_of(config);

  std::vector<ProductSample> products(config.count, {ComplexField::zeros(grid), ComplexField::zeros(grid)});
  std::vector<GaugeSample> gauges(config.count, {zero_pair(grid), zero_pair(grid), ComplexField::zeros(grid)});
  parallel_for(config.count, [&](std::size_t i) {
    const auto seed = [&](Stream s) { return draw_seed(config.seed, s, i); };
    products[i] = {random_scalar(grid, profile, seed(kProductF)), random_scalar(grid, profile, seed(kProductG))};
    gauges[i] = {random_pair(grid, profile, seed(kGaugeF)), random_pair(grid, profile, seed(kGaugeG)),
                 random_scalar(grid, profile, seed(kGaugeH))};
  });

  // Per-sample reports evaluated in parallel, then merged in index order.
  std::vector<std::vector<RatioReport>> parts(config.count);
  parallel_for(config.count, [&](std::size_t i) {
    auto p = survey_product_bounds(partition, std::span(products).subspan(i, 1), config.q, config.seed);
    auto g = survey_gauge_bounds(partition, std::span(gauges).subspan(i, 1), config.q, config.seed);
    p.insert(p.end(), g.begin(), g.end());
    parts[i] = std::move(p);
  });
  const std::string hash = config_hash(config);
  std::vector<RatioReport> out;
  for (std::size_t k = 0; k < parts.front().size(); ++k) {
    std::vector<double> ratios;
    for (const auto& part : parts) ratios.push_back(part[k].ratios.front());
    auto report = make_ratio_report(parts.front()[k].inequality_id, config.q, std::move(ratios), config.seed);
    report.config_hash = hash;
    out.push_back(std::move(report));
  }
  return out;
}

}  // namespace msm
