#pragma once

// Lagrangian control solver. Each electron moves with dx/dt = V and, since
// dE/dt = V along the path, x(t) = x0 + E(t) - E0(x0) in closed form.
// Trajectories of neighbours cross exactly where dx/dx0 = F vanishes.

#include <optional>
#include <span>
#include <vector>

#include "coldplasma/analytic.hpp"
#include "coldplasma/euler.hpp"
#include "coldplasma/profiles.hpp"

namespace coldplasma {

struct Characteristic {
  double x0 = 0.0;
  Nu nu{0.0};
  CharState init;
  GradState grad0;

  // sampled path on [0, t_end]
  std::vector<double> times;
  std::vector<double> path;
  std::vector<CharState> states;
  /// q = G/F and s = 1 - (1 - s0)/F; past a zero of F these continue the
  /// formulas and no longer describe a classical solution.
  std::vector<GradState> grads;

  double position(double t) const;
  CharState state(double t) const;
  /// dx/dx0 along the path, equal to F(t).
  double stretch(double t) const;
  /// Density 1 - s carried by this electron, (1 - s0) / F(t).
  double density(double t) const;
};

/// Launches the characteristic through x0 and samples it at `samples`
/// equally spaced times on [0, t].
Characteristic advect(double x0, const GaussianData& data, Nu nu, double t,
                      int samples = 65);

/// Characteristics launched from `count` equally spaced points of the domain.
std::vector<Characteristic> launch_fan(const GaussianData& data, Nu nu,
                                       const Domain& domain, int count,
                                       double t, int samples = 65);

/// Earliest time in (0, horizon] at which two adjacent trajectories meet,
/// scanned with step `dt` and refined by bisection to 1e-8.
std::optional<double> detect_crossing(std::span<const Characteristic> fan,
                                      double horizon, double dt = 1e-3);

/// Monotone cubic (PCHIP) interpolation of the fan at time t onto the grid
/// nodes; nodes outside the fan are zero. Throws CrossingBeforeT.
GridField reconstruct(std::span<const Characteristic> fan, double t,
                      const Domain& grid, double dt = 1e-3);

/// Exact V, E at the grid nodes at time t, obtained by inverting
/// x0 -> x(t; x0) node by node. Requires t before the first crossing.
GridField exact_field(const GaussianData& data, Nu nu, double t,
                      const Domain& grid);

}  // namespace coldplasma
