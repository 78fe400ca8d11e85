#include "coldplasma/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "coldplasma/errors.hpp"

namespace coldplasma {
namespace {

enum class Family { Oscillatory, Critical, Overdamped };

Family family_of(double nu) {
  if (std::abs(nu - 2.0) < kCriticalBand) return Family::Critical;
  return nu < 2.0 ? Family::Oscillatory : Family::Overdamped;
}

struct Response {
  double x;
  double v;
};

// Solution of y'' + nu y' + y = 0 with y(0) = x0, y'(0) = v0.
Response damped_response(double nu, double x0, double v0, double t) {
  switch (family_of(nu)) {
    case Family::Oscillatory: {
      const double w = 0.5 * std::sqrt(4.0 - nu * nu);
      const double decay = std::exp(-0.5 * nu * t);
      const double c = std::cos(w * t);
      const double s = std::sin(w * t);
      const double a = (nu * x0 + 2.0 * v0) / (2.0 * w);
      const double b = (nu * v0 + 2.0 * x0) / (2.0 * w);
      return {(a * s + x0 * c) * decay, (-b * s + v0 * c) * decay};
    }
    case Family::Critical: {
      const double decay = std::exp(-t);
      const double slope = x0 + v0;
      return {(x0 + slope * t) * decay, (v0 - slope * t) * decay};
    }
    case Family::Overdamped: {
      const double w1 = 0.5 * std::sqrt(nu * nu - 4.0);
      // e^{-nu t/2} sinh(w1 t) and e^{-nu t/2} cosh(w1 t) without overflow
      const double lead = std::exp((w1 - 0.5 * nu) * t);
      const double em = std::expm1(-2.0 * w1 * t);
      const double sh = -0.5 * lead * em;
      const double ch = 0.5 * lead * (2.0 + em);
      const double a = (nu * x0 + 2.0 * v0) / (2.0 * w1);
      const double b = (nu * v0 + 2.0 * x0) / (2.0 * w1);
      return {a * sh + x0 * ch, -b * sh + v0 * ch};
    }
  }
  return {0.0, 0.0};
}

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw InvalidArgument("time must be finite and non-negative");
  }
}

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::Undamped:
      return "undamped";
    case Regime::Underdamped:
      return "underdamped";
    case Regime::Critical:
      return "critical";
    case Regime::Overdamped:
      return "overdamped";
  }
  return "unknown";
}

Nu::Nu(double value) : value_(value) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw InvalidArgument("collision frequency nu must be finite and >= 0");
  }
}

Regime Nu::regime() const {
  if (value_ == 0.0) return Regime::Undamped;
  if (value_ < 2.0) return Regime::Underdamped;
  if (value_ == 2.0) return Regime::Critical;
  return Regime::Overdamped;
}

double Nu::omega() const {
  if (value_ >= 2.0) throw InvalidArgument("omega requires nu < 2");
  return 0.5 * std::sqrt(4.0 - value_ * value_);
}

double Nu::omega1() const {
  if (value_ <= 2.0) throw InvalidArgument("omega1 requires nu > 2");
  return 0.5 * std::sqrt(value_ * value_ - 4.0);
}

double Nu::z() const { return value_ + 2.0 * omega1(); }

double Nu::z_plus() const { return -0.5 * value_ + omega1(); }

double Nu::z_minus() const { return -0.5 * value_ - omega1(); }

Regime regime(Nu nu) { return nu.regime(); }

CharState eval_VE(Nu nu, CharState init, double t) {
  require_time(t);
  // E'' + nu E' + E = 0 with E(0) = E0, E'(0) = V0, and V = E'.
  const Response r = damped_response(nu.value(), init.E, init.V, t);
  return {r.v, r.x};
}

FGPair eval_FG(Nu nu, GradState init, double t) {
  require_time(t);
  const Response r = damped_response(nu.value(), init.s, init.q, t);
  return {1.0 - init.s + r.x, r.v, t};
}

std::vector<double> stationary_times_of_F(Nu nu, GradState init,
                                          double t_end) {
  require_time(t_end);
  std::vector<double> times;
  const double q0 = init.q;
  const double s0 = init.s;
  const double v = nu.value();
  switch (family_of(v)) {
    case Family::Oscillatory: {
      const double w = 0.5 * std::sqrt(4.0 - v * v);
      const double b = (v * q0 + 2.0 * s0) / (2.0 * w);
      if (b == 0.0 && q0 == 0.0) break;
      // G ~ q0 cos(wt) - b sin(wt) = R cos(wt + phase)
      const double phase = std::atan2(b, q0);
      double theta = 0.5 * std::numbers::pi - phase;
      while (theta <= 0.0) theta += std::numbers::pi;
      while (theta - std::numbers::pi > 0.0) theta -= std::numbers::pi;
      for (; theta / w <= t_end; theta += std::numbers::pi) {
        times.push_back(theta / w);
      }
      break;
    }
    case Family::Critical: {
      const double slope = s0 + q0;
      if (slope == 0.0) break;
      const double t = q0 / slope;
      if (t > 0.0 && t <= t_end) times.push_back(t);
      break;
    }
    case Family::Overdamped: {
      const double w1 = 0.5 * std::sqrt(v * v - 4.0);
      const double b = (v * q0 + 2.0 * s0) / (2.0 * w1);
      if (b == 0.0) break;
      const double r = q0 / b;
      if (r > 0.0 && r < 1.0) {
        const double t = std::atanh(r) / w1;
        if (t <= t_end) times.push_back(t);
      }
      break;
    }
  }
  return times;
}

double min_F_on(Nu nu, GradState init, double t_end) {
  double m = std::min(1.0, eval_FG(nu, init, t_end).F);
  for (double t : stationary_times_of_F(nu, init, t_end)) {
    m = std::min(m, eval_FG(nu, init, t).F);
  }
  return m;
}

GradState eval_qs(Nu nu, GradState init, double t) {
  require_time(t);
  if (min_F_on(nu, init, t) <= 0.0) {
    // Locate the first zero for the diagnostic: F > 0 on [0, lo], F <= 0 at hi.
    double hi = t;
    for (double ts : stationary_times_of_F(nu, init, t)) {
      if (eval_FG(nu, init, ts).F <= 0.0) {
        hi = ts;
        break;
      }
    }
    double lo = 0.0;
    for (int i = 0; i < 200 && hi - lo > 1e-14 * (1.0 + hi); ++i) {
      const double mid = 0.5 * (lo + hi);
      (eval_FG(nu, init, mid).F > 0.0 ? lo : hi) = mid;
    }
    throw BlowupCrossed(hi);
  }
  const FGPair fg = eval_FG(nu, init, t);
  return {fg.G / fg.F, 1.0 - (1.0 - init.s) / fg.F};
}

double eval_s_riccati(Nu nu, GradState init, double t) {
  const FGPair fg = eval_FG(nu, init, t);
  const double v = nu.value();
  // F'' = -nu F' - (F - (1 - s0))
  const double g_dot = -v * fg.G - (fg.F - (1.0 - init.s));
  const double q = fg.G / fg.F;
  const double q_dot = g_dot / fg.F - q * q;
  return -q_dot - q * q - v * q;
}

}  // namespace coldplasma
