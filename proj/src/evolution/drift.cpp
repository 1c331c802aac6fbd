#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "msm/evolution.hpp"

namespace msm {

namespace {
const Complex kI(0.0, 1.0);
}

void validate(const DriftProblem& problem) {
  require_same_grid(problem.v1.grid(), problem.v2.grid());
  const double scale = std::max({max_abs(problem.v1), max_abs(problem.v2), 1.0});
  for (const auto* f : {&problem.v1, &problem.v2}) {
    for (const auto& x : f->samples()) {
      if (std::abs(x.imag()) > 1e-12 * scale) throw std::invalid_argument("drift field must be real");
    }
  }
}

double gradient_sup(const DriftProblem& problem) { return jacobian_sup(problem.v1, problem.v2); }

ComplexField drift_remainder(const DriftProblem& problem, double t, const ComplexField& u) {
  const auto v1 = PaddedField::lift(problem.v1);
  const auto v2 = PaddedField::lift(problem.v2);
  ComplexField out = ComplexField::zeros(u.grid());
  if (problem.form == DriftForm::advective) {
    const auto d1 = PaddedField::lift(derivative(u, Axis::x1));
    const auto d2 = PaddedField::lift(derivative(u, Axis::x2));
    out = -(v1 * d1 + v2 * d2).project();
  } else {
    const auto lu = PaddedField::lift(u);
    out = -(derivative((v1 * lu).project(), Axis::x1) + derivative((v2 * lu).project(), Axis::x2));
  }
  if (problem.forcing) out = out - kI * problem.forcing(t);
  return out;
}

std::vector<Probe> drift_probes() {
  const std::pair<const char*, double> orders[] = {
      {"H-1", -1.0}, {"H-0.5", -0.5}, {"H0", 0.0}, {"H0.5", 0.5}, {"H1", 1.0}};
  std::vector<Probe> probes;
  for (const auto& [name, s] : orders) {
    probes.push_back({name, [s](const std::vector<ComplexField>& y) { return sobolev_norm(y[0], s); }});
  }
  return probes;
}

TrajectoryRecord evolve_drift(const DriftProblem& problem, const ComplexField& u0, double t0,
                              double dt, std::size_t n_steps, const TrajectoryOptions& options) {
  validate(problem);
  require_same_grid(problem.v1.grid(), u0.grid());
  TrajectoryOptions opts = options;
  if (opts.probes.empty()) opts.probes = drift_probes();
  const Remainder n = [&problem](double t, const std::vector<ComplexField>& y) {
    return std::vector<ComplexField>{drift_remainder(problem, t, y[0])};
  };
  return integrate(n, {u0}, t0, dt, n_steps, opts);
}

}  // namespace msm
