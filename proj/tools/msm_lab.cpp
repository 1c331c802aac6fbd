#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <limits>
#include <optional>
#include <string>

#include "msm/config.hpp"
#include "msm/experiments.hpp"
#include "msm/snapshot.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kAssertion = 2;
constexpr int kBlowUp = 3;

struct Common {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> n;
  std::optional<double> dt;
  std::string input;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config, "Configuration file")->required()->check(CLI::ExistingFile);
  app->add_option("--out", c.out, "Output directory")->required();
  app->add_option("--seed", c.seed, "Override [ensemble] seed");
  app->add_option("--n", c.n, "Override [grid] n");
  app->add_option("--dt", c.dt, "Override [time] dt");
}

msm::ExperimentConfig load(const Common& c) {
  auto config = msm::load_config(c.config);
  if (c.seed) config.seed = *c.seed;
  if (c.n) config.n = *c.n;
  if (c.dt) config.dt = *c.dt;
  if (!c.input.empty()) config.input = c.input;
  msm::validate(config);
  return config;
}

ordered_json header(const std::string& command, const msm::ExperimentConfig& config) {
  ordered_json j;
  j["command"] = command;
  j["config_hash"] = msm::config_hash(config);
  j["seed"] = config.seed;
  j["out_of_theorem"] = config.out_of_theorem();
  return j;
}

void write_json(const fs::path& path, const ordered_json& j) {
  std::ofstream out(path);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

const char* status_name(msm::TrajectoryStatus s) {
  return s == msm::TrajectoryStatus::completed ? "completed" : "blow_up";
}

int run_simulate(const msm::ExperimentConfig& config, const fs::path& out) {
  const auto record = msm::simulate(config);
  {
    std::ofstream csv(out / "trajectory.csv");
    msm::write_csv(csv, record, {"L2", "Hs", "Hminushalf", "Besov_half_q2"});
  }
  if (!record.snapshots.empty()) {
    fs::create_directories(out / "snapshots");
    for (std::size_t k = 0; k < record.snapshots.size(); ++k) {
      char name[32];
      std::snprintf(name, sizeof name, "snapshot_%06zu.msmf", k);
      msm::write_snapshot(out / "snapshots" / name, record.snapshots[k].fields);
    }
  }
  auto j = header("simulate", config);
  j["status"] = status_name(record.status);
  j["diagnostic"] = record.diagnostic;
  j["samples"] = record.times.size();
  j["final_time"] = record.times.back();
  const auto l2 = record.column("L2");
  j["mass_initial"] = l2.front() * l2.front();
  j["mass_final"] = l2.back() * l2.back();
  j["mass_relative_drift"] = l2.front() == 0.0 ? 0.0 : std::abs(l2.back() * l2.back() / (l2.front() * l2.front()) - 1.0);
  j["snapshots"] = record.snapshots.size();
  write_json(out / "simulate.json", j);
  return record.status == msm::TrajectoryStatus::completed ? kOk : kBlowUp;
}

int run_inequalities(const msm::ExperimentConfig& config, const fs::path& out) {
  const auto reports = msm::run_inequality_survey(config);
  auto j = header("verify-inequalities", config);
  j["sample_count"] = config.count;
  j["reports"] = ordered_json::array();
  bool finite = true;
  for (const auto& r : reports) {
    j["reports"].push_back(msm::to_json(r));
    finite = finite && std::isfinite(r.max_ratio);
  }
  write_json(out / "inequalities.json", j);
  return finite ? kOk : kAssertion;
}

int run_stability(const msm::ExperimentConfig& config, const fs::path& out) {
  auto j = header("stability", config);
  j["draws"] = ordered_json::array();
  bool ok = true;
  std::vector<double> fitted;
  for (std::size_t draw = 0; draw < config.draws; ++draw) {
    const auto report = msm::run_stability_experiment(config, draw);
    ordered_json d;
    d["draw"] = draw;
    d["status"] = status_name(report.status);
    d["diagnostic"] = report.diagnostic;
    if (report.status != msm::TrajectoryStatus::completed) {
      j["draws"].push_back(d);
      write_json(out / "stability.json", j);
      return kBlowUp;
    }
    d["times"] = report.times;
    d["u_besov"] = report.u_besov;
    d["u_l4_besov"] = report.u_l4_besov;
    d["u_sup_h_half"] = report.u_sup_h_half;
    d["runs"] = ordered_json::array();
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0, c_sum = 0.0;
    std::size_t c_count = 0;
    for (const auto& run : report.runs) {
      ordered_json r;
      r["delta"] = run.delta;
      r["w_norm"] = run.w_norm;
      r["sup_ratio"] = run.sup_ratio;
      r["fitted_c"] = run.fitted_c;
      r["envelope"] = run.envelope;
      r["fitted_c_diff"] = run.fitted_c_diff;
      r["envelope_diff"] = run.envelope_diff;
      r["v_l4_besov"] = run.v_l4_besov;
      r["v_sup_h_half"] = run.v_sup_h_half;
      d["runs"].push_back(r);
      if (run.delta > 0.0) {
        lo = std::min(lo, run.sup_ratio);
        hi = std::max(hi, run.sup_ratio);
        c_sum += run.fitted_c;
        ++c_count;
      }
      for (std::size_t k = 0; k < run.w_norm.size(); ++k) {
        ok = ok && run.w_norm[k] <= run.envelope[k] * (1.0 + 1e-12);
      }
    }
    if (hi > 0.0) {
      d["sup_ratio_spread"] = hi / lo;
      ok = ok && hi / lo < 2.0;
    }
    if (c_count > 0) {
      d["fitted_c"] = c_sum / static_cast<double>(c_count);
      fitted.push_back(c_sum / static_cast<double>(c_count));
    }
    j["draws"].push_back(d);
  }
  if (config.draws > 1 && !fitted.empty()) {
    double mean = 0.0;
    for (const double c : fitted) mean += c / static_cast<double>(fitted.size());
    double variation = 0.0;
    for (const double c : fitted) variation = std::max(variation, mean == 0.0 ? 0.0 : std::abs(c - mean) / mean);
    j["fitted_c_variation"] = variation;
    ok = ok && variation < 0.25;
  }
  write_json(out / "stability.json", j);
  return ok ? kOk : kAssertion;
}

int run_gauge(const msm::ExperimentConfig& config, const fs::path& out) {
  const auto z = msm::roundtrip_map(config);
  const auto report = msm::gauge_roundtrip(z);
  auto j = header("gauge-roundtrip", config);
  j.update(msm::to_json(report));
  const bool ok = report.div_residual < 1e-8 && report.curvature_residual < 1e-8 &&
                  report.cons1_residual < 1e-8 && report.two_route_discrepancy < 1e-6;
  j["passed"] = ok;
  write_json(out / "gauge_roundtrip.json", j);
  return ok ? kOk : kAssertion;
}

int run_embedding(const msm::ExperimentConfig& config, const fs::path& out) {
  const auto record = msm::simulate(config);
  auto j = header("embedding", config);
  j["status"] = status_name(record.status);
  if (record.status != msm::TrajectoryStatus::completed) {
    j["diagnostic"] = record.diagnostic;
    write_json(out / "embedding.json", j);
    return kBlowUp;
  }
  const auto report = msm::embedding_report(record, config.s, config.q, config.epsilon, config.seed);
  j["report"] = msm::to_json(report);
  const bool ok = report.ratio <= 1.0 + 1e-10 && report.pointwise.max_ratio <= 1.0 + 1e-10;
  j["passed"] = ok;
  write_json(out / "embedding.json", j);
  return ok ? kOk : kAssertion;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical experiments for the modified Schrodinger map system"};
  app.require_subcommand(1);
  Common common;
  auto* simulate = app.add_subcommand("simulate", "Evolve random data and record norms");
  auto* inequalities = app.add_subcommand("verify-inequalities", "Product and gauge estimate surveys");
  auto* stability = app.add_subcommand("stability", "Two-solution difference experiment");
  auto* gauge = app.add_subcommand("gauge-roundtrip", "Map to gauged fields and identity checks");
  auto* embedding = app.add_subcommand("embedding", "Time-integrated interpolation chain");
  for (auto* sub : {simulate, inequalities, stability, gauge, embedding}) add_common(sub, common);
  gauge->add_option("--input", common.input, "Snapshot whose first field is the map z");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    const auto config = load(common);
    const fs::path out = common.out;
    fs::create_directories(out);
    if (simulate->parsed()) return run_simulate(config, out);
    if (inequalities->parsed()) return run_inequalities(config, out);
    if (stability->parsed()) return run_stability(config, out);
    if (gauge->parsed()) return run_gauge(config, out);
    return run_embedding(config, out);
  } catch (const std::exception& e) {
    std::cerr << "msm-lab: " << e.what() << '\n';
    return kUsage;
  }
}
