#pragma once

// Gaussian initial data
//
//   E0(x) =  k1 x exp(-x^2 / sigma),   V0(x) = -k2 x exp(-x^2 / sigma),
//
// with k1 = (a*/rho*)^2 and sigma = rho*^2 / 2 for laser-excited wakes, plus
// the computational domain [-d, d] and the plasma parameter conversions.

#include <vector>

#include "coldplasma/analytic.hpp"

namespace coldplasma {

struct GaussianData {
  double k1 = 0.0;
  double k2 = 0.0;
  double sigma = 0.5;
  double rho_star = 1.0;
  double a_star = 0.0;

  /// From field amplitude k1 and localisation scale rho*; a* = rho* sqrt(k1).
  static GaussianData from_amplitudes(double k1, double k2, double rho_star);
  /// From the laser-derived scales (a*, rho*): k1 = (a*/rho*)^2.
  static GaussianData from_scales(double a_star, double rho_star,
                                  double k2 = 0.0);

  /// Peak field a*^2 / (2 rho* sqrt(e)).
  double e_max() const;
};

struct ProfileSample {
  double V0 = 0.0;
  double E0 = 0.0;
  double q0 = 0.0;  ///< dV0/dx
  double s0 = 0.0;  ///< dE0/dx
};

ProfileSample eval_profile(const GaussianData& data, double x);

inline GradState gradient_of(const ProfileSample& p) { return {p.q0, p.s0}; }
inline CharState state_of(const ProfileSample& p) { return {p.V0, p.E0}; }

/// Uniform mesh on [-d, d] with n_cells cells.
struct Domain {
  double d = 4.5;
  int n_cells = 1024;

  /// Default cut-off d = factor * rho*.
  static Domain around(const GaussianData& data, int n_cells,
                       double factor = 4.5);

  double h() const { return 2.0 * d / n_cells; }
  int n_nodes() const { return n_cells + 1; }
  /// Node i in [0, n_cells]; node n_cells/2 is exactly 0 for even n_cells.
  double node(int i) const {
    return d * static_cast<double>(2 * i - n_cells) / n_cells;
  }
};

/// Gradient samples for the breaking-time infimum: `points` uniform nodes on
/// [-d, d] plus x = 0 and x = +-sqrt(3 sigma / 2), where s0 and q0 are
/// stationary.
std::vector<GradState> sample_gradients(const GaussianData& data,
                                        const Domain& domain,
                                        int points = 2049);

struct PlasmaParams {
  int Z = 1;
  double ln_Lambda = 10.0;
  double eta = 0.0;
  double a0 = 0.0;
  double tau_star = 2.0;
};

/// nu = Z (sqrt(8)/3) eta^{3/2} ln(Lambda).
Nu dimensionless_nu(const PlasmaParams& p);

/// a*^2 = a0^2 tau* sqrt(pi/2) exp(-tau*^2 / 8).
double a_star_from_laser(const PlasmaParams& p);

}  // namespace coldplasma
