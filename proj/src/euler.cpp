#include "coldplasma/euler.hpp"

#include <algorithm>
#include <cmath>

#include "coldplasma/errors.hpp"

namespace coldplasma {
namespace {

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

bool all_finite(const GridField& s) {
  auto finite = [](double x) { return std::isfinite(x); };
  return std::all_of(s.V.begin(), s.V.end(), finite) &&
         std::all_of(s.E.begin(), s.E.end(), finite);
}

}  // namespace

GridField initial_field(const GaussianData& data, const Domain& domain,
                        double tau) {
  if (domain.n_cells < 2) throw InvalidArgument("n_cells must be >= 2");
  GridField f;
  f.domain = domain;
  f.tau = tau;
  const auto n = static_cast<std::size_t>(domain.n_nodes());
  f.V.resize(n);
  f.E.resize(n);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const ProfileSample p = eval_profile(data, domain.node(static_cast<int>(i)));
    f.V[i] = p.V0;
    f.E[i] = p.E0;
  }
  f.V.front() = f.V.back() = 0.0;
  f.E.front() = f.E.back() = 0.0;
  return f;
}

double cfl_step(const GridField& state, const StepLimits& limits) {
  return limits.cfl * state.domain.h() /
         (max_abs(state.V) + limits.speed_margin);
}

GridField step(const GridField& state, Nu nu, const StepLimits& limits) {
  const double h = state.domain.h();
  const double tau = state.tau;
  if (!(tau > 0.0)) throw InvalidArgument("time step must be positive");
  const double courant = tau * (max_abs(state.V) + limits.speed_margin) / h;
  // cfl_step() lands exactly on the limit; allow for its rounding
  if (courant > limits.cfl * (1.0 + 1e-12)) {
    throw CflViolation("Courant number " + std::to_string(courant) +
                       " exceeds " + std::to_string(limits.cfl));
  }

  const double r = tau / h;
  const double v = nu.value();
  const std::vector<double>& V = state.V;
  const std::vector<double>& E = state.E;
  const std::size_t n = V.size();
  // o = +1: forward predictor, backward corrector; o = -1: the reverse.
  const int o = state.steps % 2 == 0 ? 1 : -1;
  auto flux = [](double u) { return 0.5 * u * u; };

  std::vector<double> Vp(n, 0.0), Ep(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const std::size_t j = o > 0 ? i + 1 : i - 1;
    Vp[i] = V[i] - o * r * (flux(V[j]) - flux(V[i])) - tau * (E[i] + v * V[i]);
    Ep[i] = E[i] - o * r * V[i] * (E[j] - E[i]) + tau * V[i];
  }

  GridField next;
  next.domain = state.domain;
  next.tau = tau;
  next.t = state.t + tau;
  next.steps = state.steps + 1;
  next.V.assign(n, 0.0);
  next.E.assign(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const std::size_t j = o > 0 ? i - 1 : i + 1;
    const double dv = o * (flux(Vp[i]) - flux(Vp[j]));
    const double de = o * Vp[i] * (Ep[i] - Ep[j]);
    next.V[i] = 0.5 * (V[i] + Vp[i] - r * dv - tau * (Ep[i] + v * Vp[i]));
    next.E[i] = 0.5 * (E[i] + Ep[i] - r * de + tau * Vp[i]);
  }
  return next;
}

std::vector<double> density(const GridField& state) {
  const std::vector<double>& E = state.E;
  const std::size_t n = E.size();
  const double h = state.domain.h();
  std::vector<double> N(n, 1.0);
  if (n < 3) return N;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    N[i] = 1.0 - (E[i + 1] - E[i - 1]) / (2.0 * h);
  }
  N[0] = 1.0 - (-3.0 * E[0] + 4.0 * E[1] - E[2]) / (2.0 * h);
  N[n - 1] = 1.0 - (3.0 * E[n - 1] - 4.0 * E[n - 2] + E[n - 3]) / (2.0 * h);
  return N;
}

double max_abs_gradient(const GridField& state) {
  const double h = state.domain.h();
  double g = 0.0;
  for (std::size_t i = 0; i + 1 < state.V.size(); ++i) {
    g = std::max(g, std::abs(state.V[i + 1] - state.V[i]) / h);
    g = std::max(g, std::abs(state.E[i + 1] - state.E[i]) / h);
  }
  return g;
}

RunOutcome evolve(GridField state, Nu nu, double horizon,
                  const RunSettings& settings, const Observer& observer) {
  if (!(horizon > 0.0)) throw InvalidArgument("horizon must be positive");
  if (!(settings.tau > 0.0)) throw InvalidArgument("tau must be positive");
  const Detection& det = settings.detection;

  RunOutcome out;
  auto record = [&](const GridField& s, double g, double n_min) {
    out.max_abs_grad_history.push_back({s.t, g});
    out.density_min_history.push_back({s.t, n_min});
  };
  {
    const auto N = density(state);
    record(state, max_abs_gradient(state),
           *std::min_element(N.begin(), N.end()));
  }
  if (observer) observer(state);

  while (state.t < horizon) {
    const double remaining = horizon - state.t;
    // avoid a sliver of a final step
    double tau = std::min(settings.tau, cfl_step(state, settings.limits));
    if (remaining < 1.5 * tau) tau = remaining <= tau ? remaining : 0.5 * remaining;
    state.tau = tau;

    GridField next = step(state, nu, settings.limits);
    if (remaining <= tau) next.t = horizon;

    bool broken = !all_finite(next);
    double g = 0.0;
    double n_min = 1.0;
    if (!broken) {
      const auto N = density(next);
      const auto [lo, hi] = std::minmax_element(N.begin(), N.end());
      n_min = *lo;
      g = max_abs_gradient(next);
      broken = g > det.g_max || *lo < det.n_floor || *hi > det.n_ceil;
    }
    if (broken) {
      out.status = RunStatus::BrokeDown;
      out.t_break = 0.5 * (state.t + next.t);
      break;
    }
    record(next, g, n_min);
    state = std::move(next);
    if (observer) observer(state);
  }
  out.final_state = std::move(state);
  return out;
}

RunOutcome run(const GaussianData& data, Nu nu, double horizon,
               const RunSettings& settings, const Observer& observer) {
  const Domain domain = Domain::around(data, settings.n_cells, settings.d_factor);
  return evolve(initial_field(data, domain, settings.tau), nu, horizon,
                settings, observer);
}

}  // namespace coldplasma
