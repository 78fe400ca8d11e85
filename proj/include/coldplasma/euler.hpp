#pragma once

// Eulerian McCormack solver for
//
//   V_t + (V^2/2)_x = -E - nu V,    E_t + V E_x = V,
//
// on [-d, d] with V(+-d) = E(+-d) = 0. Density follows from N = 1 - E_x.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "coldplasma/analytic.hpp"
#include "coldplasma/profiles.hpp"

namespace coldplasma {

struct GridField {
  std::vector<double> V;
  std::vector<double> E;
  Domain domain;
  double t = 0.0;
  double tau = 0.0;  ///< step used by the next call to step()
  std::size_t steps = 0;
};

struct StepLimits {
  double cfl = 0.9;
  /// Added to max|V| when checking tau (max|V| + margin) / h <= cfl.
  double speed_margin = 1.0;
};

/// Thresholds that declare the discrete solution broken.
struct Detection {
  double g_max = 1e4;    ///< max |V_x| or |E_x|
  double n_floor = 1e-6;
  double n_ceil = 1e6;
};

struct RunSettings {
  int n_cells = 2048;
  double tau = 2e-3;     ///< requested step, clamped by the CFL limit
  double d_factor = 4.5; ///< d = d_factor * rho*
  StepLimits limits;
  Detection detection;
};

enum class RunStatus { CompletedSmooth, BrokeDown };

struct TimeSample {
  double t = 0.0;
  double value = 0.0;
};

struct RunOutcome {
  RunStatus status = RunStatus::CompletedSmooth;
  /// Midpoint of the last clean step and the detecting step.
  std::optional<double> t_break;
  std::vector<TimeSample> max_abs_grad_history;
  std::vector<TimeSample> density_min_history;
  /// Last state that passed detection.
  GridField final_state;
};

/// Called with the initial state and after every accepted step.
using Observer = std::function<void(const GridField&)>;

GridField initial_field(const GaussianData& data, const Domain& domain,
                        double tau);

/// One predictor-corrector step of size state.tau. The one-sided difference
/// direction alternates with the step count. Throws CflViolation.
GridField step(const GridField& state, Nu nu, const StepLimits& limits = {});

/// N = 1 - E_x, centred in the interior, one-sided second order at the ends.
std::vector<double> density(const GridField& state);

/// max over cells of |V_x| and |E_x| (first differences).
double max_abs_gradient(const GridField& state);

/// Largest tau allowed by the CFL condition for the current state.
double cfl_step(const GridField& state, const StepLimits& limits);

/// Advances `initial` to `horizon` or until breakdown is detected.
RunOutcome evolve(GridField initial, Nu nu, double horizon,
                  const RunSettings& settings, const Observer& observer = {});

RunOutcome run(const GaussianData& data, Nu nu, double horizon,
               const RunSettings& settings = {},
               const Observer& observer = {});

}  // namespace coldplasma
