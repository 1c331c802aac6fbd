#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "msm/config.hpp"
#include "msm/evolution.hpp"
#include "msm/gauge_field.hpp"
#include "msm/littlewood_paley.hpp"
#include "msm/random_field.hpp"
#include "msm/ratio_report.hpp"

namespace msm {

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 picks the
/// hardware concurrency). Exceptions are rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  std::size_t threads = 0);

SpectralProfile profile_of(const ExperimentConfig& config);

// ---------------------------------------------------------------- surveys

/// One draw of the product-estimate survey.
struct ProductSample {
  ComplexField f;
  ComplexField g;
};

/// Reports "cal1", "cal2", "cal3", "cal4" and "two" with B = B^{1/2}_{q,2}.
std::vector<RatioReport> survey_product_bounds(const DyadicPartition& partition,
                                               std::span<const ProductSample> samples, double q,
                                               std::uint64_t seed);

/// Product and gauge surveys over config.count seeded draws (count >= 50).
std::vector<RatioReport> run_inequality_survey(const ExperimentConfig& config);

// -------------------------------------------------------------- stability

struct StabilityRun {
  double delta = 0.0;
  /// ||w(t)||_{H^-1/2} at the sample times.
  std::vector<double> w_norm;
  /// sup_t ||w(t)|| / ||w(0)||.
  double sup_ratio = 0.0;
  /// Smallest c with ||w(t)|| <= ||w(0)|| exp(c I(t)), I(t) the integral of
  /// (1 + ||u||_B^2 + ||v||_B^2)^2.
  double fitted_c = 0.0;
  std::vector<double> envelope;
  /// Same fit for the exponent (1 + ||u||_{L^4 B}^2 + ||v||_{L^4 B}^2)^2,
  /// the L^4 norms taken over [0, t].
  double fitted_c_diff = 0.0;
  std::vector<double> envelope_diff;
  /// Time integral of ||v||_B^4 and sup of ||v||_{H^1/2}.
  double v_l4_besov = 0.0;
  double v_sup_h_half = 0.0;
};

struct StabilityReport {
  std::vector<double> times;
  std::vector<double> u_besov;  ///< ||u(t)||_{B^{1/2}_{q,2}}
  double u_l4_besov = 0.0;      ///< (integral ||u||_B^4)^{1/4}
  double u_sup_h_half = 0.0;
  std::vector<StabilityRun> runs;
  TrajectoryStatus status = TrajectoryStatus::completed;
  std::string diagnostic;
};

/// Trapezoidal integral of samples over times.
double trapezoid(std::span<const double> times, std::span<const double> values);

/// Evolves u0 and u0 + delta * p for each configured delta, where p is a
/// random pair with ||p||_{H^-1/2} = 1 drawn with `draw`.
StabilityReport run_stability_experiment(const ExperimentConfig& config, std::size_t draw = 0);

// ------------------------------------------------------- gauge roundtrip

struct GaugeRoundtripReport {
  double energy = 0.0;
  double field_energy = 0.0;  ///< 1/2 ||u||_2^2
  double div_residual = 0.0;
  double curvature_residual = 0.0;
  double cons1_residual = 0.0;
  double two_route_discrepancy = 0.0;
  std::array<double, 2> holonomy{0.0, 0.0};
  /// Checks on the coupling-convention potential A[u, u].
  double formula_div_residual = 0.0;
  double formula_curvature_residual = 0.0;
};

GaugeRoundtripReport gauge_roundtrip(const ComplexField& z);

struct RefinementLevel {
  std::size_t n;
  GaugeRoundtripReport report;
};

/// The roundtrip on z resampled to each grid size.
std::vector<RefinementLevel> refinement_scan(const ComplexField& z, std::span<const std::size_t> sizes);

/// Random map from the config, or the first field of config.input.
ComplexField roundtrip_map(const ExperimentConfig& config);

nlohmann::ordered_json to_json(const GaugeRoundtripReport& report);

// ---------------------------------------------------------- embedding

struct EmbeddingExponents {
  double p;      ///< 1/p = 1/2 - 1/q
  double theta;  ///< 2/p
  double s_sup;  ///< s - eps, integrability 2
  double s_low;  ///< s - 1/2 - eps, integrability inf
  double s_mid;  ///< s - 1/p - eps, integrability q
};

EmbeddingExponents embedding_exponents(double s, double q, double epsilon);

/// Trajectory columns B_sup, B_low and B_mid holding the pair Besov norms
/// B^{s_sup}_{2,2}, B^{s_low}_{inf,2} and B^{s_mid}_{q,2}.
std::vector<Probe> embedding_probes(const Grid& grid, double s, double q, double epsilon);

struct EmbeddingReport {
  double lhs = 0.0;    ///< integral ||u||_{B_mid}^p
  double rhs = 0.0;    ///< sup ||u||_{B_sup}^{p-2} integral ||u||_{B_low}^2
  double ratio = 0.0;  ///< lhs / rhs, 0/0 = 0
  RatioReport pointwise;  ///< B_mid / (B_sup^{1-theta} B_low^theta) per sample
};

/// Throws std::out_of_range when the record lacks the embedding columns.
EmbeddingReport embedding_report(const TrajectoryRecord& record, double s, double q, double epsilon,
                                 std::uint64_t seed = 0);

nlohmann::ordered_json to_json(const EmbeddingReport& report);

// ----------------------------------------------------------- simulate

/// evolve_msm from a random pair with the config's grid, profile and time
/// stepping; probes are msm_probes plus embedding_probes.
TrajectoryRecord simulate(const ExperimentConfig& config);

}  // namespace msm
