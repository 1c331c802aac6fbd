#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "msm/experiments.hpp"

namespace msm {

namespace {

enum Stream : std::uint64_t { kData = 10, kPerturbation = 11 };

double pair_h(const std::vector<ComplexField>& y, double s) {
  return std::hypot(sobolev_norm(y[0], s), sobolev_norm(y[1], s));
}

// Running trapezoid integrals of values over times.
std::vector<double> cumulative(std::span<const double> times, std::span<const double> values) {
  std::vector<double> out(times.size(), 0.0);
  for (std::size_t k = 1; k < times.size(); ++k) {
    out[k] = out[k - 1] + 0.5 * (times[k] - times[k - 1]) * (values[k] + values[k - 1]);
  }
  return out;
}

// Smallest c >= 0 with w_k <= w_0 exp(c x_k) at every sample with x_k > 0.
double fit_exponent(std::span<const double> w, std::span<const double> x) {
  double c = 0.0;
  if (w.empty() || w[0] == 0.0) return c;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (x[k] > 0.0 && w[k] > w[0]) c = std::max(c, std::log(w[k] / w[0]) / x[k]);
  }
  return c;
}

std::vector<double> envelope(double w0, double c, std::span<const double> x) {
  std::vector<double> out;
  out.reserve(x.size());
  for (const double v : x) out.push_back(w0 * std::exp(c * v));
  return out;
}

}  // namespace

double trapezoid(std::span<const double> times, std::span<const double> values) {
  if (times.size() != values.size()) throw std::invalid_argument("trapezoid needs matching samples");
  return times.empty() ? 0.0 : cumulative(times, values).back();
}

StabilityReport run_stability_experiment(const ExperimentConfig& config, std::size_t draw) {
  validate(config);
  const Grid grid = config.grid();
  const auto profile = profile_of(config);
  const FieldPair u0 = random_pair(grid, profile, draw_seed(config.seed, kData, draw));
  SpectralProfile unit = profile;
  unit.amplitude = 1.0;
  FieldPair p = random_pair(grid, unit, draw_seed(config.seed, kPerturbation, draw));
  const double p_norm = pair_norm(p, [](const ComplexField& f) { return sobolev_norm(f, -0.5); });
  p = (1.0 / p_norm) * p;

  const auto partition = std::make_shared<const DyadicPartition>(grid);
  const double q = config.q;
  TrajectoryOptions options;
  options.sample_stride = config.stride;
  options.snapshot_stride = config.stride;
  options.probes = {
      {"Besov_half_q2",
       [partition, q](const std::vector<ComplexField>& y) {
         return std::hypot(besov_norm(*partition, y[0], 0.5, q, 2.0), besov_norm(*partition, y[1], 0.5, q, 2.0));
       }},
      {"Hhalf", [](const std::vector<ComplexField>& y) { return pair_h(y, 0.5); }},
  };

  StabilityReport report;
  const auto trajectory_u = evolve_msm({u0, 0.0}, config.dt, config.steps(), options);
  if (trajectory_u.status != TrajectoryStatus::completed) {
    report.status = trajectory_u.status;
    report.diagnostic = "u: " + trajectory_u.diagnostic;
    return report;
  }
  report.times = trajectory_u.times;
  report.u_besov = trajectory_u.column("Besov_half_q2");
  const auto u_h = trajectory_u.column("Hhalf");
  report.u_sup_h_half = *std::max_element(u_h.begin(), u_h.end());
  std::vector<double> u4;
  for (const double b : report.u_besov) u4.push_back(std::pow(b, 4));
  const auto u4_running = cumulative(report.times, u4);
  report.u_l4_besov = std::pow(u4_running.back(), 0.25);

  for (const double delta : config.deltas) {
    StabilityRun run;
    run.delta = delta;
    const FieldPair v0 = u0 + Complex(delta) * p;
    const auto trajectory_v = evolve_msm({v0, 0.0}, config.dt, config.steps(), options);
    if (trajectory_v.status != TrajectoryStatus::completed) {
      report.status = trajectory_v.status;
      report.diagnostic = "v (delta " + std::to_string(delta) + "): " + trajectory_v.diagnostic;
      return report;
    }
    const auto v_besov = trajectory_v.column("Besov_half_q2");
    const auto v_h = trajectory_v.column("Hhalf");
    run.v_sup_h_half = *std::max_element(v_h.begin(), v_h.end());

    if (trajectory_u.snapshots.size() != report.times.size() ||
        trajectory_v.snapshots.size() != report.times.size()) {
      throw std::logic_error("snapshots and samples are misaligned");
    }
    std::vector<double> weight, v4;
    for (std::size_t k = 0; k < report.times.size(); ++k) {
      const auto& su = trajectory_u.snapshots[k].fields;
      const auto& sv = trajectory_v.snapshots[k].fields;
      run.w_norm.push_back(pair_h({su[0] - sv[0], su[1] - sv[1]}, -0.5));
      const double a = report.u_besov[k], b = v_besov[k];
      weight.push_back(std::pow(1.0 + a * a + b * b, 2));
      v4.push_back(std::pow(b, 4));
    }
    const auto integral = cumulative(report.times, weight);
    const auto v4_running = cumulative(report.times, v4);
    run.v_l4_besov = std::pow(v4_running.back(), 0.25);
    std::vector<double> exponent_diff;
    for (std::size_t k = 0; k < report.times.size(); ++k) {
      exponent_diff.push_back(std::pow(1.0 + std::sqrt(u4_running[k]) + std::sqrt(v4_running[k]), 2));
    }

    const double w0 = run.w_norm.front();
    for (const double w : run.w_norm) run.sup_ratio = std::max(run.sup_ratio, safe_ratio(w, w0));
    run.fitted_c = fit_exponent(run.w_norm, integral);
    run.envelope = envelope(w0, run.fitted_c, integral);
    run.fitted_c_diff = fit_exponent(run.w_norm, exponent_diff);
    run.envelope_diff = envelope(w0, run.fitted_c_diff, exponent_diff);
    report.runs.push_back(std::move(run));
  }
  return report;
}

}  // namespace msm
