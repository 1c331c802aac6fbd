#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "msm/evolution.hpp"

namespace msm {

namespace {

using Fields = std::vector<ComplexField>;

struct Propagators {
  FourierMultiplier half;
  FourierMultiplier full;
};

Propagators propagators(const Grid& grid, double dt) {
  return {FourierMultiplier::schrodinger_propagator(grid, 0.5 * dt),
          FourierMultiplier::schrodinger_propagator(grid, dt)};
}

Fields apply(const FourierMultiplier& e, const Fields& y) {
  Fields out;
  out.reserve(y.size());
  for (const auto& f : y) out.push_back(apply_multiplier(f, e));
  return out;
}

// sum_i c_i x_i componentwise.
Fields combine(std::initializer_list<std::pair<double, const Fields*>> terms) {
  const std::size_t count = terms.begin()->second->size();
  Fields out;
  out.reserve(count);
  std::vector<Complex> coeffs;
  std::vector<ComplexField> parts;
  for (std::size_t c = 0; c < count; ++c) {
    coeffs.clear();
    parts.clear();
    for (const auto& [w, fields] : terms) {
      coeffs.push_back(w);
      parts.push_back((*fields)[c]);
    }
    out.push_back(linear_combination(coeffs, parts));
  }
  return out;
}

Fields step(const Remainder& n, const Propagators& e, double t, double h, const Fields& y) {
  const Fields k1 = n(t, y);
  const Fields y_half = apply(e.half, y);
  const Fields k1_half = apply(e.half, k1);
  const Fields k2 = n(t + 0.5 * h, combine({{1.0, &y_half}, {0.5 * h, &k1_half}}));
  const Fields k3 = n(t + 0.5 * h, combine({{1.0, &y_half}, {0.5 * h, &k2}}));
  const Fields y_full = apply(e.full, y);
  const Fields k3_half = apply(e.half, k3);
  const Fields k4 = n(t + h, combine({{1.0, &y_full}, {h, &k3_half}}));
  const Fields k1_full = apply(e.full, k1);
  const Fields k23 = combine({{1.0, &k2}, {1.0, &k3}});
  const Fields k23_half = apply(e.half, k23);
  return combine({{1.0, &y_full}, {h / 6.0, &k1_full}, {h / 3.0, &k23_half}, {h / 6.0, &k4}});
}

bool exceeds(double value, double threshold) { return !std::isfinite(value) || value > threshold; }

}  // namespace

std::vector<ComplexField> lawson_rk4_step(const Remainder& remainder, double t, double dt,
                                          const std::vector<ComplexField>& y) {
  if (y.empty()) throw std::invalid_argument("empty state");
  return step(remainder, propagators(y.front().grid(), dt), t, dt, y);
}

std::vector<double> TrajectoryRecord::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range("trajectory has no column " + name);
  const auto c = static_cast<std::size_t>(it - columns.begin());
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row[c]);
  return out;
}

bool TrajectoryRecord::has_column(const std::string& name) const {
  return std::find(columns.begin(), columns.end(), name) != columns.end();
}

TrajectoryRecord integrate(const Remainder& remainder, std::vector<ComplexField> y0, double t0,
                           double dt, std::size_t n_steps, const TrajectoryOptions& options) {
  if (y0.empty()) throw std::invalid_argument("empty state");
  if (options.sample_stride == 0) throw std::invalid_argument("sample stride must be positive");
  const Propagators e = propagators(y0.front().grid(), dt);

  TrajectoryRecord record;
  for (const auto& p : options.probes) record.columns.push_back(p.name);

  Fields y = std::move(y0);
  const auto sample = [&](std::size_t k) {
    const double t = t0 + static_cast<double>(k) * dt;
    std::vector<double> row;
    row.reserve(options.probes.size());
    bool blown = false;
    for (const auto& p : options.probes) {
      row.push_back(p.evaluate(y));
      blown = blown || exceeds(row.back(), options.blowup_threshold);
    }
    record.times.push_back(t);
    record.rows.push_back(std::move(row));
    return !blown;
  };
  const auto snapshot = [&](std::size_t k) {
    if (options.snapshot_stride != 0 && (k % options.snapshot_stride == 0 || k == n_steps)) {
      record.snapshots.push_back({t0 + static_cast<double>(k) * dt, y});
    }
  };

  bool healthy = sample(0);
  snapshot(0);
  if (!healthy) {
    record.status = TrajectoryStatus::blow_up;
    record.diagnostic = "initial state exceeds the blow-up threshold";
  }
  for (std::size_t k = 1; healthy && k <= n_steps; ++k) {
    y = step(remainder, e, t0 + static_cast<double>(k - 1) * dt, dt, y);
    for (const auto& f : y) {
      if (exceeds(coefficient_norm(f), options.blowup_threshold)) healthy = false;
    }
    if (!healthy || k % options.sample_stride == 0 || k == n_steps) healthy = sample(k) && healthy;
    if (!healthy) {
      record.status = TrajectoryStatus::blow_up;
      record.diagnostic = "norm exceeded " + std::to_string(options.blowup_threshold) +
                          " at step " + std::to_string(k) + " (t = " +
                          std::to_string(t0 + static_cast<double>(k) * dt) + ")";
      break;
    }
    snapshot(k);
  }
  record.final_state = std::move(y);
  return record;
}

}  // namespace msm
