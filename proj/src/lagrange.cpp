#include "coldplasma/lagrange.hpp"

// pchip.hpp (Boost 1.74) calls isnan unqualified
#include <math.h>

#include <boost/math/interpolators/pchip.hpp>

#include <cmath>

#include "coldplasma/errors.hpp"
#include "roots.hpp"

namespace coldplasma {

double Characteristic::position(double t) const {
  return x0 + eval_VE(nu, init, t).E - init.E;
}

CharState Characteristic::state(double t) const { return eval_VE(nu, init, t); }

double Characteristic::stretch(double t) const {
  return eval_FG(nu, grad0, t).F;
}

double Characteristic::density(double t) const {
  return (1.0 - grad0.s) / stretch(t);
}

Characteristic advect(double x0, const GaussianData& data, Nu nu, double t,
                      int samples) {
  if (!(t >= 0.0)) throw InvalidArgument("time must be non-negative");
  if (samples < 2) throw InvalidArgument("need at least two path samples");
  const ProfileSample p = eval_profile(data, x0);
  Characteristic c{x0, nu, state_of(p), gradient_of(p), {}, {}, {}, {}};
  const auto n = static_cast<std::size_t>(samples);
  c.times.reserve(n);
  c.path.reserve(n);
  c.states.reserve(n);
  c.grads.reserve(n);
  for (int i = 0; i < samples; ++i) {
    const double ti = t * i / (samples - 1);
    const CharState st = eval_VE(nu, c.init, ti);
    const FGPair fg = eval_FG(nu, c.grad0, ti);
    c.times.push_back(ti);
    c.path.push_back(x0 + st.E - c.init.E);
    c.states.push_back(st);
    c.grads.push_back({fg.G / fg.F, 1.0 - (1.0 - c.grad0.s) / fg.F});
  }
  return c;
}

std::vector<Characteristic> launch_fan(const GaussianData& data, Nu nu,
                                       const Domain& domain, int count,
                                       double t, int samples) {
  if (count < 2) throw InvalidArgument("a fan needs at least two members");
  std::vector<Characteristic> fan;
  fan.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double x0 = domain.d * static_cast<double>(2 * i - (count - 1)) /
                      (count - 1);
    fan.push_back(advect(x0, data, nu, t, samples));
  }
  return fan;
}

namespace {

bool ordered_at(std::span<const Characteristic> fan, double t) {
  double prev = fan.front().position(t);
  for (std::size_t i = 1; i < fan.size(); ++i) {
    const double x = fan[i].position(t);
    if (!(x > prev)) return false;
    prev = x;
  }
  return true;
}

}  // namespace

std::optional<double> detect_crossing(std::span<const Characteristic> fan,
                                      double horizon, double dt) {
  if (fan.size() < 2) return std::nullopt;
  if (!(dt > 0.0)) throw InvalidArgument("scan step must be positive");
  for (std::size_t i = 1; i < fan.size(); ++i) {
    if (!(fan[i].x0 > fan[i - 1].x0)) {
      throw InvalidArgument("launch points must be strictly increasing");
    }
  }
  const auto steps = static_cast<long>(std::ceil(horizon / dt));
  double prev = 0.0;
  for (long k = 1; k <= steps; ++k) {
    const double t = std::min(horizon, k * dt);
    if (!ordered_at(fan, t)) {
      double lo = prev;
      double hi = t;
      while (hi - lo > 1e-8) {
        const double mid = 0.5 * (lo + hi);
        (ordered_at(fan, mid) ? lo : hi) = mid;
      }
      return hi;
    }
    prev = t;
  }
  return std::nullopt;
}

GridField reconstruct(std::span<const Characteristic> fan, double t,
                      const Domain& grid, double dt) {
  if (fan.size() < 4) throw InvalidArgument("reconstruction needs >= 4 members");
  if (const auto tc = detect_crossing(fan, t, dt)) throw CrossingBeforeT(*tc);

  std::vector<double> xs, vs, es;
  xs.reserve(fan.size());
  vs.reserve(fan.size());
  es.reserve(fan.size());
  for (const Characteristic& c : fan) {
    const CharState st = c.state(t);
    xs.push_back(c.x0 + st.E - c.init.E);
    vs.push_back(st.V);
    es.push_back(st.E);
  }
  const double x_lo = xs.front();
  const double x_hi = xs.back();
  using boost::math::interpolators::pchip;
  pchip<std::vector<double>> v_interp(std::vector<double>(xs), std::move(vs));
  pchip<std::vector<double>> e_interp(std::move(xs), std::move(es));

  GridField out;
  out.domain = grid;
  out.t = t;
  const int n = grid.n_nodes();
  out.V.assign(static_cast<std::size_t>(n), 0.0);
  out.E.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 1; i + 1 < n; ++i) {
    const double x = grid.node(i);
    if (x < x_lo || x > x_hi) continue;
    out.V[static_cast<std::size_t>(i)] = v_interp(x);
    out.E[static_cast<std::size_t>(i)] = e_interp(x);
  }
  return out;
}

GridField exact_field(const GaussianData& data, Nu nu, double t,
                      const Domain& grid) {
  if (!(t >= 0.0)) throw InvalidArgument("time must be non-negative");
  GridField out;
  out.domain = grid;
  out.t = t;
  const int n = grid.n_nodes();
  out.V.assign(static_cast<std::size_t>(n), 0.0);
  out.E.assign(static_cast<std::size_t>(n), 0.0);

  for (int i = 1; i + 1 < n; ++i) {
    const double x = grid.node(i);
    auto mismatch = [&](double x0) {
      const ProfileSample p = eval_profile(data, x0);
      return x0 + eval_VE(nu, state_of(p), t).E - p.E0 - x;
    };
    double w = 0.25;
    double f_lo = mismatch(x - w);
    double f_hi = mismatch(x + w);
    while (f_lo > 0.0 || f_hi < 0.0) {
      w *= 2.0;
      if (w > 1e6) throw NoRoot("cannot bracket the launch point");
      f_lo = mismatch(x - w);
      f_hi = mismatch(x + w);
    }
    const double x0 = detail::bracketed_root(mismatch, x - w, x + w, f_lo, f_hi);
    const CharState st = eval_VE(nu, state_of(eval_profile(data, x0)), t);
    out.V[static_cast<std::size_t>(i)] = st.V;
    out.E[static_cast<std::size_t>(i)] = st.E;
  }
  return out;
}

}  // namespace coldplasma
