#pragma once

// Exact smooth/blow-up classification of pointwise gradient data (s0, q0).
//
// Along a characteristic the gradients blow up exactly when F has a positive
// zero. F is a damped oscillation about 1 - s0 whose successive minima never
// decrease, so the sign of F at its first positive minimum decides everything.

#include <optional>
#include <span>
#include <vector>

#include "coldplasma/analytic.hpp"

namespace coldplasma {

enum class Region { GloballySmooth, Blowup };

struct Classification {
  Region region = Region::GloballySmooth;
  /// First positive zero of F; present iff region == Blowup.
  std::optional<double> breaking_time;
};

struct CriticalAmplitude {
  double k_cr = 0.0;
  double t_break_at_threshold = 0.0;
};

/// F at its first positive minimum, or a positive stand-in when F has no
/// positive minimum (then `value` is inf_{t>0} F = min(1, 1 - s0)).
struct PhiValue {
  double value = 1.0;
  bool has_minimum = false;
  double t_min = 0.0;
};

struct SeparatrixPoint {
  double s0 = 0.0;
  double q0 = 0.0;
};

/// |phi| below this counts as lying on the separatrix (closed region II).
inline constexpr double kSeparatrixTolerance = 1e-13;

/// First positive local minimum of F, or nullopt if there is none.
///
/// nu < 2 : T1 = (2/sqrt(4-nu^2)) atan(q0 sqrt(4-nu^2) / (nu q0 + 2 s0)) is a
///          minimum iff nu q0 + 2 s0 < 0; otherwise the minimum follows half a
///          period later. Minima with T1 <= 0 move on by a full period.
/// nu = 2 : t = q0 / (s0 + q0), a minimum iff s0 + q0 < 0 and q0 < 0.
/// nu > 2 : t = ln((2 s0 + z q0) / (2 s0 + (4/z) q0)) / sqrt(nu^2 - 4),
///          valid when the ratio exceeds 1 and F(t) < 1 - s0.
std::optional<double> min_time_of_F(Nu nu, GradState init);

/// Throws InvalidArgument for s0 > 1.
PhiValue phi(Nu nu, double s0, double q0);

Classification classify(Nu nu, GradState init);

/// Infimum of the pointwise breaking times; nullopt if every sample is smooth.
std::optional<double> breaking_time_field(Nu nu,
                                          std::span<const GradState> samples);

/// Threshold amplitude of E0 = k x exp(-x^2/sigma), V0 = 0. Requires nu < 2.
CriticalAmplitude k_cr_underdamped(Nu nu);

/// Threshold amplitude of V0 = -k x exp(-x^2/sigma), E0 = 0. Requires nu > 2.
CriticalAmplitude k_cr_overdamped(Nu nu);

/// Lower bound on the density of any globally smooth solution.
double density_lower_bound(Nu nu);

/// s0 on the separatrix for the given q0; throws NoRoot if there is none
/// with s0 <= 1.
double separatrix_s0(Nu nu, double q0);

/// `count` equally spaced q0 values on [q_lo, q_hi]; throws NoRoot if any
/// of them has no separatrix point.
std::vector<SeparatrixPoint> sample_separatrix(Nu nu, double q_lo, double q_hi,
                                               int count);

}  // namespace coldplasma
