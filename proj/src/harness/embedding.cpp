#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

#include "msm/experiments.hpp"

namespace msm {

namespace {
enum Stream : std::uint64_t { kInitial = 30 };
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

EmbeddingExponents embedding_exponents(double s, double q, double epsilon) {
  if (!(q > 2.0)) throw std::invalid_argument("embedding needs q > 2");
  const double p = 2.0 * q / (q - 2.0);
  return {p, 2.0 / p, s - epsilon, s - 0.5 - epsilon, s - 1.0 / p - epsilon};
}

std::vector<Probe> embedding_probes(const Grid& grid, double s, double q, double epsilon) {
  const auto partition = std::make_shared<const DyadicPartition>(grid);
  const auto e = embedding_exponents(s, q, epsilon);
  const auto probe = [partition](std::string name, double order, double p) {
    return Probe{std::move(name), [partition, order, p](const std::vector<ComplexField>& y) {
                   return std::hypot(besov_norm(*partition, y[0], order, p, 2.0),
                                     besov_norm(*partition, y[1], order, p, 2.0));
                 }};
  };
  return {probe("B_sup", e.s_sup, 2.0), probe("B_low", e.s_low, kInf), probe("B_mid", e.s_mid, q)};
}

EmbeddingReport embedding_report(const TrajectoryRecord& record, double s, double q, double epsilon,
                                 std::uint64_t seed) {
  const auto e = embedding_exponents(s, q, epsilon);
  const auto sup = record.column("B_sup");
  const auto low = record.column("B_low");
  const auto mid = record.column("B_mid");
  if (record.times.empty()) throw std::out_of_range("trajectory has no samples");

  std::vector<double> mid_p, low_2, pointwise;
  for (std::size_t k = 0; k < record.times.size(); ++k) {
    mid_p.push_back(std::pow(mid[k], e.p));
    low_2.push_back(low[k] * low[k]);
    pointwise.push_back(safe_ratio(mid[k], std::pow(sup[k], 1.0 - e.theta) * std::pow(low[k], e.theta)));
  }
  EmbeddingReport r;
  r.lhs = trapezoid(record.times, mid_p);
  r.rhs = std::pow(*std::max_element(sup.begin(), sup.end()), e.p - 2.0) * trapezoid(record.times, low_2);
  r.ratio = safe_ratio(r.lhs, r.rhs);
  r.pointwise = make_ratio_report("embedding_pointwise", q, std::move(pointwise), seed);
  return r;
}

nlohmann::ordered_json to_json(const EmbeddingReport& r) {
  nlohmann::ordered_json j;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["ratio"] = r.ratio;
  j["pointwise"] = to_json(r.pointwise);
  return j;
}

TrajectoryRecord simulate(const ExperimentConfig& config) {
  validate(config);
  const Grid grid = config.grid();
  const FieldPair u0 = random_pair(grid, profile_of(config), draw_seed(config.seed, kInitial, 0));
  TrajectoryOptions options;
  options.sample_stride = config.stride;
  options.snapshot_stride = config.snapshot_stride;
  options.probes = msm_probes(grid, config.s, config.q);
  for (auto& p : embedding_probes(grid, config.s, config.q, config.epsilon)) options.probes.push_back(std::move(p));
  return evolve_msm({u0, 0.0}, config.dt, config.steps(), options);
}

}  // namespace msm
