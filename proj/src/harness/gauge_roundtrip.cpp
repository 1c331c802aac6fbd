#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "msm/experiments.hpp"
#include "msm/gauge_transform.hpp"
#include "msm/snapshot.hpp"

namespace msm {

namespace {
enum Stream : std::uint64_t { kMap = 20 };
}

GaugeRoundtripReport gauge_roundtrip(const ComplexField& z) {
  const auto frame = derive_u(z);
  const auto geometric = mean_free(frame.connection);
  const auto formula = compute_A_frame(frame.u);
  const auto coupling = compute_A(frame.u, frame.u);

  GaugeRoundtripReport r;
  r.energy = energy(z);
  r.field_energy = 0.5 * (std::pow(lp_norm(frame.u.u1, 2.0), 2) + std::pow(lp_norm(frame.u.u2, 2.0), 2));
  r.div_residual = divergence_check(frame.connection);
  r.curvature_residual = curvature_check(frame.u, frame.connection, CurvatureSign::geometric);
  r.cons1_residual = compatibility_residual(frame.u, frame.connection);
  r.two_route_discrepancy = relative_l2_difference(geometric, formula);
  r.holonomy = frame.holonomy;
  r.formula_div_residual = divergence_check(coupling);
  r.formula_curvature_residual = curvature_check(frame.u, coupling, CurvatureSign::coupling);
  return r;
}

std::vector<RefinementLevel> refinement_scan(const ComplexField& z, std::span<const std::size_t> sizes) {
  std::vector<RefinementLevel> out;
  for (const auto n : sizes) {
    out.push_back({n, gauge_roundtrip(resample(z, Grid(n, z.grid().length())))});
  }
  return out;
}

ComplexField roundtrip_map(const ExperimentConfig& config) {
  if (!config.input.empty()) {
    const auto fields = read_snapshot(config.input);
    if (fields.empty()) throw std::runtime_error("snapshot holds no fields: " + config.input);
    return fields.front();
  }
  return random_map(config.grid(), profile_of(config), draw_seed(config.seed, kMap, 0));
}

nlohmann::ordered_json to_json(const GaugeRoundtripReport& r) {
  nlohmann::ordered_json j;
  j["energy"] = r.energy;
  j["field_energy"] = r.field_energy;
  j["div_residual"] = r.div_residual;
  j["curvature_residual"] = r.curvature_residual;
  j["cons1_residual"] = r.cons1_residual;
  j["two_route_discrepancy"] = r.two_route_discrepancy;
  j["holonomy"] = {r.holonomy[0], r.holonomy[1]};
  j["formula_div_residual"] = r.formula_div_residual;
  j["formula_curvature_residual"] = r.formula_curvature_residual;
  return j;
}

}  // namespace msm
