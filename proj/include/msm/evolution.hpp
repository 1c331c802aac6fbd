#pragma once

// Time integration of the gauged system
//
//   d_t u_j = i Lap u_j - 2 div(A u_j) - i (A0 + |A|^2) u_j + cubic_j,
//   cubic_1 = 4 Im(u2 conj(u1)) u2,  cubic_2 = 4 Im(u1 conj(u2)) u1,
//
// with A = A[u, u], A0 = A0[u, u], of linear drift equations, and of the
// difference system of two solutions. Stepping is classical RK4 on the
// integrating-factor form v = e^{-it Lap} u (Lawson), so the free flow is
// exact for any step.

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "msm/field_pair.hpp"
#include "msm/spectral.hpp"

namespace msm {

struct MsmState {
  FieldPair u;
  double t = 0.0;
};

/// ||u1||_2^2 + ||u2||_2^2.
double mass(const FieldPair& u);

/// Nonlinear part of the right side (everything but i Lap u).
FieldPair msm_nonlinearity(const FieldPair& u);
/// Full right side d_t u.
FieldPair msm_rhs(const FieldPair& u);

/// msm_rhs(u) - msm_rhs(v), assembled from the bilinear forms applied to
/// w = u - v.
FieldPair difference_rhs(const FieldPair& u, const FieldPair& v);

enum class DriftForm {
  advective,   ///< i d_t u + Lap u + i v.grad u = F
  divergence,  ///< i d_t u + Lap u + i div(v u) = F
};

struct DriftProblem {
  /// Real, time-independent drift.
  ComplexField v1;
  ComplexField v2;
  DriftForm form = DriftForm::advective;
  /// Optional forcing F(t).
  std::function<ComplexField(double)> forcing;
};

/// Throws std::invalid_argument if the drift is not real to 1e-12.
void validate(const DriftProblem& problem);

/// max over the grid of the Hilbert-Schmidt norm of grad v.
double gradient_sup(const DriftProblem& problem);

/// Nonlinear part of the drift equation (everything but i Lap u).
ComplexField drift_remainder(const DriftProblem& problem, double t, const ComplexField& u);

/// The remainder N(t, y) of d_t y = i Lap y + N(t, y) for a list of fields.
using Remainder =
    std::function<std::vector<ComplexField>(double t, const std::vector<ComplexField>& y)>;

/// One Lawson RK4 step of size dt (which may be negative).
std::vector<ComplexField> lawson_rk4_step(const Remainder& remainder, double t, double dt,
                                          const std::vector<ComplexField>& y);

/// A named scalar evaluated on the state at every sample.
struct Probe {
  std::string name;
  std::function<double(const std::vector<ComplexField>&)> evaluate;
};

struct TrajectoryOptions {
  /// Record probes every this many steps (and always at the start and end).
  std::size_t sample_stride = 1;
  /// Keep the full state every this many steps and at the end; 0 keeps none.
  std::size_t snapshot_stride = 0;
  double blowup_threshold = 1e8;
  /// Probes; empty selects the defaults of the evolution being run.
  std::vector<Probe> probes;
};

enum class TrajectoryStatus { completed, blow_up };

struct StateSnapshot {
  double t;
  std::vector<ComplexField> fields;
};

struct TrajectoryRecord {
  std::vector<std::string> columns;  ///< probe names, after the implicit t
  std::vector<double> times;
  std::vector<std::vector<double>> rows;  ///< rows[k][c] at times[k]
  std::vector<StateSnapshot> snapshots;
  std::vector<ComplexField> final_state;
  TrajectoryStatus status = TrajectoryStatus::completed;
  std::string diagnostic;

  /// Values of one probe over time; throws std::out_of_range if absent.
  std::vector<double> column(const std::string& name) const;
  bool has_column(const std::string& name) const;
};

/// Integrates d_t y = i Lap y + N(t, y) from t0 for n_steps steps.
/// Aborts with status blow_up once any probe or the coefficient norm of a
/// component exceeds the threshold or stops being finite.
TrajectoryRecord integrate(const Remainder& remainder, std::vector<ComplexField> y0, double t0,
                           double dt, std::size_t n_steps, const TrajectoryOptions& options);

/// Default columns L2, Hs, Hminushalf, Besov_half_q2 of the pair.
std::vector<Probe> msm_probes(const Grid& grid, double s, double q);

TrajectoryRecord evolve_msm(const MsmState& state, double dt, std::size_t n_steps,
                            const TrajectoryOptions& options = {});

/// Default columns H-1, H-0.5, H0, H0.5, H1.
std::vector<Probe> drift_probes();

TrajectoryRecord evolve_drift(const DriftProblem& problem, const ComplexField& u0, double t0,
                              double dt, std::size_t n_steps, const TrajectoryOptions& options = {});

/// CSV with header t followed by the selected probe names (all when
/// `columns` is empty). Throws std::out_of_range on an unknown column.
void write_csv(std::ostream& out, const TrajectoryRecord& record,
               const std::vector<std::string>& columns = {});

}  // namespace msm
