#include "coldplasma/profiles.hpp"

#include <cmath>
#include <numbers>

#include "coldplasma/errors.hpp"

namespace coldplasma {
namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InvalidArgument(std::string(name) + " must be positive");
  }
}

}  // namespace

GaussianData GaussianData::from_amplitudes(double k1, double k2,
                                           double rho_star) {
  require_positive(rho_star, "rho_star");
  if (!std::isfinite(k1) || !std::isfinite(k2)) {
    throw InvalidArgument("profile amplitudes must be finite");
  }
  return {k1, k2, 0.5 * rho_star * rho_star, rho_star,
          rho_star * std::sqrt(std::abs(k1))};
}

GaussianData GaussianData::from_scales(double a_star, double rho_star,
                                       double k2) {
  require_positive(rho_star, "rho_star");
  const double ratio = a_star / rho_star;
  return {ratio * ratio, k2, 0.5 * rho_star * rho_star, rho_star, a_star};
}

double GaussianData::e_max() const {
  return a_star * a_star / (2.0 * rho_star * std::sqrt(std::numbers::e));
}

ProfileSample eval_profile(const GaussianData& data, double x) {
  require_positive(data.sigma, "sigma");
  const double g = std::exp(-x * x / data.sigma);
  const double dg = (1.0 - 2.0 * x * x / data.sigma) * g;  // d/dx (x g)
  return {-data.k2 * x * g, data.k1 * x * g, -data.k2 * dg, data.k1 * dg};
}

Domain Domain::around(const GaussianData& data, int n_cells, double factor) {
  require_positive(factor, "domain factor");
  if (n_cells < 2) throw InvalidArgument("n_cells must be >= 2");
  return {factor * data.rho_star, n_cells};
}

std::vector<GradState> sample_gradients(const GaussianData& data,
                                        const Domain& domain, int points) {
  if (points < 2) throw InvalidArgument("need at least two sample points");
  std::vector<GradState> out;
  out.reserve(static_cast<std::size_t>(points) + 3);
  for (int i = 0; i < points; ++i) {
    const double x = -domain.d + 2.0 * domain.d * i / (points - 1);
    out.push_back(gradient_of(eval_profile(data, x)));
  }
  const double xs = std::sqrt(1.5 * data.sigma);
  for (double x : {0.0, xs, -xs}) {
    out.push_back(gradient_of(eval_profile(data, x)));
  }
  return out;
}

Nu dimensionless_nu(const PlasmaParams& p) {
  if (p.Z <= 0) throw InvalidArgument("ion charge number must be positive");
  require_positive(p.ln_Lambda, "Coulomb logarithm");
  if (!(p.eta >= 0.0)) throw InvalidArgument("eta must be non-negative");
  return Nu(p.Z * (std::sqrt(8.0) / 3.0) * std::pow(p.eta, 1.5) *
            p.ln_Lambda);
}

double a_star_from_laser(const PlasmaParams& p) {
  require_positive(p.tau_star, "tau_star");
  if (!(p.a0 >= 0.0)) throw InvalidArgument("a0 must be non-negative");
  const double a2 = p.a0 * p.a0 * p.tau_star *
                    std::sqrt(0.5 * std::numbers::pi) *
                    std::exp(-p.tau_star * p.tau_star / 8.0);
  return std::sqrt(a2);
}

}  // namespace coldplasma
