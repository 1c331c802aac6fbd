#include <algorithm>
#include <memory>
#include <stdexcept>
#include <ostream>

#include "msm/evolution.hpp"
#include "msm/littlewood_paley.hpp"

namespace msm {

std::vector<Probe> msm_probes(const Grid& grid, double s, double q) {
  const auto partition = std::make_shared<const DyadicPartition>(grid);
  const auto pair = [](const std::vector<ComplexField>& y) { return FieldPair{y[0], y[1]}; };
  return {
      {"L2", [pair](const auto& y) { return pair_norm(pair(y), [](const ComplexField& f) { return lp_norm(f, 2.0); }); }},
      {"Hs", [pair, s](const auto& y) { return pair_norm(pair(y), [s](const ComplexField& f) { return sobolev_norm(f, s); }); }},
      {"Hminushalf", [pair](const auto& y) { return pair_norm(pair(y), [](const ComplexField& f) { return sobolev_norm(f, -0.5); }); }},
      {"Besov_half_q2",
       [pair, partition, q](const auto& y) {
         return pair_norm(pair(y), [&](const ComplexField& f) { return besov_norm(*partition, f, 0.5, q, 2.0); });
       }},
  };
}

TrajectoryRecord evolve_msm(const MsmState& state, double dt, std::size_t n_steps,
                            const TrajectoryOptions& options) {
  TrajectoryOptions opts = options;
  if (opts.probes.empty()) opts.probes = msm_probes(state.u.grid(), 1.0, 6.0);
  const Remainder n = [](double, const std::vector<ComplexField>& y) {
    auto r = msm_nonlinearity({y[0], y[1]});
    return std::vector<ComplexField>{std::move(r.u1), std::move(r.u2)};
  };
  return integrate(n, {state.u.u1, state.u.u2}, state.t, dt, n_steps, opts);
}

void write_csv(std::ostream& out, const TrajectoryRecord& record,
               const std::vector<std::string>& columns) {
  const auto& names = columns.empty() ? record.columns : columns;
  std::vector<std::size_t> index;
  for (const auto& name : names) {
    const auto it = std::find(record.columns.begin(), record.columns.end(), name);
    if (it == record.columns.end()) throw std::out_of_range("trajectory has no column " + name);
    index.push_back(static_cast<std::size_t>(it - record.columns.begin()));
  }
  out << "t";
  for (const auto& c : names) out << ',' << c;
  out << '\n';
  const auto old = out.precision(17);
  for (std::size_t k = 0; k < record.times.size(); ++k) {
    out << record.times[k];
    for (const auto c : index) out << ',' << record.rows[k][c];
    out << '\n';
  }
  out.precision(old);
}

}  // namespace msm
