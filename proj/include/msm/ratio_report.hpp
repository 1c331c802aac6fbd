#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace msm {

/// Empirical LHS/RHS statistics of one inequality over a sample set.
struct RatioReport {
  std::string inequality_id;
  double q = 0.0;
  std::size_t sample_count = 0;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  double p95_ratio = 0.0;
  std::uint64_t seed = 0;
  std::string config_hash;
  std::vector<double> ratios;
};

/// lhs / rhs with the convention 0 / 0 = 0.
double safe_ratio(double lhs, double rhs);

/// Builds the statistics from raw ratios. Throws std::invalid_argument on an
/// empty sample set or on a negative or non-finite ratio.
RatioReport make_ratio_report(std::string inequality_id, double q, std::vector<double> ratios,
                              std::uint64_t seed);

/// The JSON record {inequality_id, q, sample_count, max_ratio, mean_ratio,
/// p95_ratio, seed} (plus config_hash when set).
nlohmann::ordered_json to_json(const RatioReport& report);

}  // namespace msm
