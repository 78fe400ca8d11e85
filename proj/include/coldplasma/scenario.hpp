#pragma once

// Batch scenarios behind the command-line tool. Every mode writes comma
// separated records with a header line to `data` and human-readable
// diagnostics to `log`.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "coldplasma/errors.hpp"

namespace coldplasma {

enum class Mode {
  Classify,
  Separatrix,
  SimulateEuler,
  SimulateLagrange,
  Compare,
  Figure2,
  Figure3,
  Figure4,
  Figure5,
};

std::optional<Mode> parse_mode(std::string_view name);
std::string_view to_string(Mode mode);

struct RunConfig {
  Mode mode = Mode::Classify;
  double nu = 0.2;

  // profile
  double k1 = 0.4761;
  double k2 = 0.0;
  double rho_star = 1.0;
  std::optional<double> a_star;  ///< overrides k1 with (a*/rho*)^2

  // pointwise classification
  std::optional<double> s0;
  std::optional<double> q0;

  // separatrix
  double q_min = -2.0;
  double q_max = 0.0;
  int points = 201;

  // breaking-time sweep (figure3 mode)
  double k_min = 0.5;
  double k_max = 0.999;
  int k_points = 200;

  // grid and detection
  int n_cells = 2048;
  double tau = 2e-3;
  double cfl = 0.9;
  double horizon = 25.0;
  double g_max = 1e4;
  double n_floor = 1e-6;
  double n_ceil = 1e6;

  int fan = 2049;      ///< characteristics in the Lagrangian fan
  int threads = 0;     ///< 0: hardware concurrency capped by PLASMA_THREADS
};

class ConfigError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidConfig = 1;
inline constexpr int kExitNumericalFailure = 2;

/// Throws ConfigError on out-of-range values.
void validate(const RunConfig& config);

/// Worker count for sweeps: config.threads if set, else hardware concurrency,
/// capped by PLASMA_THREADS.
unsigned worker_count(const RunConfig& config);

/// Runs one scenario; returns the process exit status.
int run_scenario(const RunConfig& config, std::ostream& data,
                 std::ostream& log);

}  // namespace coldplasma
