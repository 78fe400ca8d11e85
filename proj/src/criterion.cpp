#include "coldplasma/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "coldplasma/errors.hpp"
#include "roots.hpp"

namespace coldplasma {
namespace {

constexpr double kPi = std::numbers::pi;

void require_physical(double s0) {
  if (!(s0 <= 1.0)) {
    throw InvalidArgument("s0 must be <= 1 (density 1 - s0 must be non-negative)");
  }
}

bool in_region_two(const PhiValue& p) {
  return p.has_minimum && p.value <= kSeparatrixTolerance;
}

std::optional<double> oscillatory_min_time(double nu, double s0, double q0) {
  const double root = std::sqrt(4.0 - nu * nu);
  const double period = 4.0 * kPi / root;
  const double c = nu * q0 + 2.0 * s0;
  double t1;
  bool is_min;
  if (c != 0.0) {
    t1 = (2.0 / root) * std::atan(q0 * root / c);
    is_min = c < 0.0;
  } else {
    // limit of both branches across nu q0 + 2 s0 = 0
    t1 = kPi / root;
    is_min = q0 < 0.0;
  }
  if (!is_min) return t1 + 0.5 * period;
  return t1 > 0.0 ? t1 : t1 + period;
}

}  // namespace

std::optional<double> min_time_of_F(Nu nu, GradState init) {
  const double s0 = init.s;
  const double q0 = init.q;
  if (s0 == 0.0 && q0 == 0.0) return std::nullopt;
  const double v = nu.value();

  if (std::abs(v - 2.0) < kCriticalBand) {
    const double slope = s0 + q0;
    if (slope < 0.0 && q0 < 0.0) return q0 / slope;
    return std::nullopt;
  }
  if (v < 2.0) return oscillatory_min_time(v, s0, q0);

  const double root = std::sqrt(v * v - 4.0);
  const double z = v + root;
  const double num = 2.0 * s0 + z * q0;
  const double den = 2.0 * s0 + (4.0 / z) * q0;
  if (den == 0.0) return std::nullopt;
  const double ratio = num / den;
  if (!(ratio > 1.0) || !std::isfinite(ratio)) return std::nullopt;
  const double t = std::log(ratio) / root;
  // the single stationary point may be a maximum of F
  if (!(eval_FG(nu, init, t).F < 1.0 - s0)) return std::nullopt;
  return t;
}

PhiValue phi(Nu nu, double s0, double q0) {
  require_physical(s0);
  const GradState init{q0, s0};
  if (const auto t = min_time_of_F(nu, init)) {
    return {eval_FG(nu, init, *t).F, true, *t};
  }
  return {std::min(1.0, 1.0 - s0), false, 0.0};
}

Classification classify(Nu nu, GradState init) {
  const PhiValue p = phi(nu, init.s, init.q);
  if (!in_region_two(p)) return {Region::GloballySmooth, std::nullopt};
  if (p.value >= -kSeparatrixTolerance) {
    // tangency: F touches zero at its minimum
    return {Region::Blowup, p.t_min};
  }
  auto f = [&](double t) { return eval_FG(nu, init, t).F; };
  return {Region::Blowup,
          detail::bracketed_root(f, 0.0, p.t_min, 1.0, p.value)};
}

std::optional<double> breaking_time_field(Nu nu,
                                          std::span<const GradState> samples) {
  std::optional<double> best;
  for (const GradState& g : samples) {
    const Classification c = classify(nu, g);
    if (c.breaking_time && (!best || *c.breaking_time < *best)) {
      best = c.breaking_time;
    }
  }
  return best;
}

CriticalAmplitude k_cr_underdamped(Nu nu) {
  const double v = nu.value();
  if (v >= 2.0) throw InvalidArgument("k_cr_underdamped requires nu < 2");
  const double root = std::sqrt(4.0 - v * v);
  const double e = std::exp(-v * kPi / root);
  return {1.0 / (1.0 + e), 2.0 * kPi / root};
}

CriticalAmplitude k_cr_overdamped(Nu nu) {
  const double v = nu.value();
  if (v <= 2.0) throw InvalidArgument("k_cr_overdamped requires nu > 2");
  const double root = std::sqrt(v * v - 4.0);
  const double m = std::log((v * root + v * v - 2.0) / 2.0) / root;
  const double k = root / (std::exp(nu.z_plus() * m) -
                           std::exp(nu.z_minus() * m));
  return {k, m};
}

double density_lower_bound(Nu nu) {
  const double v = nu.value();
  if (v >= 2.0) return 0.0;
  const double e = std::exp(-v * kPi / std::sqrt(4.0 - v * v));
  return e / (1.0 + e);
}

double separatrix_s0(Nu nu, double q0) {
  auto blows_up = [&](double s0) { return in_region_two(phi(nu, s0, q0)); };
  double hi = 1.0 - 1e-12;
  if (!blows_up(hi)) {
    throw NoRoot("no separatrix point below s0 = 1 for q0 = " +
                 std::to_string(q0));
  }
  double lo = std::min(0.0, hi - 1.0);
  while (blows_up(lo)) {
    hi = lo;
    lo = 2.0 * lo - 1.0;
    if (lo < -1e8) {
      throw NoRoot("separatrix not bracketed for q0 = " + std::to_string(q0));
    }
  }
  // lo smooth, hi blow-up
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (blows_up(mid) ? hi : lo) = mid;
  }
  const double a = phi(nu, lo, q0).value;
  const double b = phi(nu, hi, q0).value;
  return std::abs(a) <= std::abs(b) ? lo : hi;
}

std::vector<SeparatrixPoint> sample_separatrix(Nu nu, double q_lo, double q_hi,
                                               int count) {
  if (count < 2) throw InvalidArgument("separatrix sampling needs count >= 2");
  if (!(q_lo <= q_hi)) throw InvalidArgument("empty q0 interval");
  std::vector<SeparatrixPoint> points;
  points.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double q0 = q_lo + (q_hi - q_lo) * i / (count - 1);
    points.push_back({separatrix_s0(nu, q0), q0});
  }
  return points;
}

}  // namespace coldplasma
