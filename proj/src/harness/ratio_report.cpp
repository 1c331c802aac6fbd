#include "msm/ratio_report.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace msm {

double safe_ratio(double lhs, double rhs) {
  if (lhs == 0.0) return 0.0;
  return lhs / rhs;
}

RatioReport make_ratio_report(std::string inequality_id, double q, std::vector<double> ratios,
                              std::uint64_t seed) {
  if (ratios.empty()) throw std::invalid_argument("ratio report needs at least one sample");
  for (double r : ratios) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw std::invalid_argument("ratio for " + inequality_id + " is negative or not finite");
    }
  }
  RatioReport report;
  report.inequality_id = std::move(inequality_id);
  report.q = q;
  report.sample_count = ratios.size();
  report.seed = seed;
  std::vector<double> sorted = ratios;
  std::sort(sorted.begin(), sorted.end());
  report.max_ratio = sorted.back();
  report.mean_ratio = std::accumulate(sorted.begin(), sorted.end(), 0.0) / static_cast<double>(sorted.size());
  // Nearest-rank percentile.
  const auto rank = static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(sorted.size())));
  report.p95_ratio = sorted[std::max<std::size_t>(rank, 1) - 1];
  report.ratios = std::move(ratios);
  return report;
}

nlohmann::ordered_json to_json(const RatioReport& report) {
  nlohmann::ordered_json j;
  j["inequality_id"] = report.inequality_id;
  j["q"] = report.q;
  j["sample_count"] = report.sample_count;
  j["max_ratio"] = report.max_ratio;
  j["mean_ratio"] = report.mean_ratio;
  j["p95_ratio"] = report.p95_ratio;
  j["seed"] = report.seed;
  if (!report.config_hash.empty()) j["config_hash"] = report.config_hash;
  return j;
}

}  // namespace msm
