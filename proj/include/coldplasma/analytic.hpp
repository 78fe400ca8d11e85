#pragma once

// Closed-form solutions along a characteristic of
//
//   V_t + V V_x + E + nu V = 0,    E_t + V E_x = V,
//
// i.e. of  V' = -E - nu V, E' = V  and of the gradient system
//   q' = -s - q^2 - nu q,  s' = q (1 - s),   q = V_x, s = E_x.
//
// The gradient system linearises through q = G / F with F'' + nu F' + F = 1 - s0,
// F(0) = 1, F'(0) = q0 and G = F'. Both problems reduce to the damped
// oscillator y'' + nu y' + y = 0, whose form depends on the collision regime.

#include <string_view>
#include <vector>

namespace coldplasma {

enum class Regime { Undamped, Underdamped, Critical, Overdamped };

std::string_view to_string(Regime regime);

/// Dimensionless electron-ion collision frequency, nu >= 0.
class Nu {
 public:
  /// Throws InvalidArgument for negative or non-finite values.
  explicit Nu(double value);

  double value() const { return value_; }
  Regime regime() const;

  /// omega = sqrt(4 - nu^2) / 2, nu < 2 only.
  double omega() const;
  /// omega1 = sqrt(nu^2 - 4) / 2, nu > 2 only.
  double omega1() const;
  /// z = nu + sqrt(nu^2 - 4), nu > 2 only.
  double z() const;
  /// Characteristic exponents (-nu +- sqrt(nu^2 - 4)) / 2, nu > 2 only.
  double z_plus() const;
  double z_minus() const;

 private:
  double value_;
};

Regime regime(Nu nu);

/// Formulas within this distance of nu = 2 switch to the critical forms.
inline constexpr double kCriticalBand = 1e-9;

struct CharState {
  double V = 0.0;
  double E = 0.0;
};

struct GradState {
  double q = 0.0;
  double s = 0.0;
};

struct FGPair {
  double F = 1.0;
  double G = 0.0;
  double t = 0.0;
};

/// (V, E) at time t along a characteristic starting from `init`.
CharState eval_VE(Nu nu, CharState init, double t);

/// F(t) and G(t) = F'(t) for gradient data `init`.
FGPair eval_FG(Nu nu, GradState init, double t);

/// (q, s) at time t; throws BlowupCrossed if F has a zero in (0, t].
/// s is recovered from (1 - s) F = 1 - s0.
GradState eval_qs(Nu nu, GradState init, double t);

/// s(t) through the Riccati identity s = -q' - q^2 - nu q, with q' expanded
/// from q = G / F. Agrees with eval_qs(...).s while F > 0.
double eval_s_riccati(Nu nu, GradState init, double t);

/// Stationary points of F (zeros of G) in (0, t_end], ascending.
std::vector<double> stationary_times_of_F(Nu nu, GradState init, double t_end);

/// min of F over [0, t_end], exact up to rounding (endpoints and stationary
/// points are inspected).
double min_F_on(Nu nu, GradState init, double t_end);

}  // namespace coldplasma
