#include <doctest.h>

#include <cmath>
#include <numbers>

#include "coldplasma/criterion.hpp"
#include "coldplasma/errors.hpp"
#include "coldplasma/lagrange.hpp"

using namespace coldplasma;

TEST_SUITE("lagrange") {

TEST_CASE("a characteristic starts at its launch point") {
  const GaussianData g = GaussianData::from_amplitudes(0.4, 0.2, 1.0);
  const Characteristic c = advect(0.37, g, Nu(0.2), 4.0, 9);
  REQUIRE(c.times.size() == 9);
  CHECK(c.path.front() == 0.37);
  CHECK(c.position(0.0) == 0.37);
  const ProfileSample p = eval_profile(g, 0.37);
  CHECK(c.states.front().V == doctest::Approx(p.V0));
  CHECK(c.states.front().E == doctest::Approx(p.E0));
  CHECK(c.stretch(0.0) == doctest::Approx(1.0));
  CHECK(c.density(0.0) == doctest::Approx(1.0 - p.s0));
  CHECK(c.times.back() == 4.0);
}

TEST_CASE("zero field leaves electrons in place") {
  const GaussianData g = GaussianData::from_amplitudes(0.0, 0.0, 1.0);
  const Characteristic c = advect(1.2, g, Nu(0.5), 10.0);
  for (double x : c.path) CHECK(x == 1.2);
}

TEST_CASE("path is the integral of V") {
  const GaussianData g = GaussianData::from_amplitudes(0.5, -0.4, 1.0);
  for (double nu : {0.0, 0.6, 2.0, 3.0}) {
    const Characteristic c = advect(0.4, g, Nu(nu), 6.0);
    const int n = 6000;
    double sum = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      sum += w * c.state(6.0 * i / n).V;
    }
    sum *= 6.0 / n / 3.0;
    CHECK(c.position(6.0) - c.x0 == doctest::Approx(sum).epsilon(1e-10));
  }
}

TEST_CASE("closed-form paths in special cases") {
  // nu = 0, V0 = 0, E0 = e0: x = x0 - e0 (1 - cos t)
  Characteristic c{0.0, Nu(0.0), {0.0, 0.25}, {}, {}, {}, {}, {}};
  for (double t : {0.5, 2.0, 7.0}) {
    CHECK(c.position(t) == doctest::Approx(-0.25 * (1.0 - std::cos(t))).epsilon(1e-13));
  }
  // nu = 2, V0 = v0, E0 = 0: x = x0 + v0 t e^{-t}
  Characteristic d{1.0, Nu(2.0), {0.3, 0.0}, {}, {}, {}, {}, {}};
  for (double t : {0.5, 2.0, 7.0}) {
    CHECK(d.position(t) == doctest::Approx(1.0 + 0.3 * t * std::exp(-t)).epsilon(1e-13));
  }
}

TEST_CASE("gradients along the path match the closed forms") {
  const GaussianData g = GaussianData::from_amplitudes(0.3, 0.1, 1.0);
  const Characteristic c = advect(0.2, g, Nu(0.2), 8.0, 17);
  for (std::size_t i = 0; i < c.times.size(); ++i) {
    const GradState e = eval_qs(Nu(0.2), c.grad0, c.times[i]);
    CHECK(c.grads[i].q == doctest::Approx(e.q).epsilon(1e-12));
    CHECK(c.grads[i].s == doctest::Approx(e.s).epsilon(1e-12));
    // (1 - s) F is carried unchanged
    CHECK(std::abs((1.0 - c.grads[i].s) * c.stretch(c.times[i]) - (1.0 - c.grad0.s)) < 1e-10);
  }
}

TEST_CASE("stretch is the derivative of the path in x0") {
  const GaussianData g = GaussianData::from_amplitudes(0.45, 0.0, 1.0);
  const double h = 1e-6;
  for (double t : {1.0, 2.5}) {
    const Characteristic c = advect(0.3, g, Nu(0.2), t, 2);
    const double fd = (advect(0.3 + h, g, Nu(0.2), t, 2).position(t) -
                       advect(0.3 - h, g, Nu(0.2), t, 2).position(t)) / (2.0 * h);
    CHECK(c.stretch(t) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("no crossing for zero data or smooth data") {
  const GaussianData zero = GaussianData::from_amplitudes(0.0, 0.0, 1.0);
  const Domain dom = Domain::around(zero, 64);
  CHECK_FALSE(detect_crossing(launch_fan(zero, Nu(0.0), dom, 65, 10.0), 10.0).has_value());
  const GaussianData calm = GaussianData::from_amplitudes(0.3, 0.0, 1.0);
  CHECK_FALSE(detect_crossing(launch_fan(calm, Nu(0.0), dom, 129, 10.0), 10.0).has_value());
}

TEST_CASE("crossing time matches the analytic infimum") {
  // k = 1, nu = 0: breaking at pi / 2
  const GaussianData g = GaussianData::from_amplitudes(1.0, 0.0, 1.0);
  const Domain dom = Domain::around(g, 2048);
  const auto fan = launch_fan(g, Nu(0.0), dom, 2049, 5.0);
  const auto t = detect_crossing(fan, 5.0);
  REQUIRE(t.has_value());
  CHECK(*t == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-4));

  for (double nu : {0.2, 2.5}) {
    const GaussianData h = nu < 2.0 ? GaussianData::from_amplitudes(0.8, 0.0, 1.0)
                                    : GaussianData::from_amplitudes(0.0, 4.0, 1.0);
    const auto analytic = breaking_time_field(Nu(nu), sample_gradients(h, dom));
    REQUIRE(analytic.has_value());
    const auto crossing = detect_crossing(launch_fan(h, Nu(nu), dom, 2049, 8.0), 8.0);
    REQUIRE(crossing.has_value());
    CHECK(std::abs(*crossing - *analytic) < 1e-4);
  }
}

TEST_CASE("launch points must increase") {
  const GaussianData g = GaussianData::from_amplitudes(0.3, 0.0, 1.0);
  std::vector<Characteristic> fan{advect(0.5, g, Nu(0.0), 1.0), advect(0.1, g, Nu(0.0), 1.0)};
  CHECK_THROWS_AS(detect_crossing(fan, 1.0), InvalidArgument);
}

TEST_CASE("reconstruction reproduces the exact field") {
  const GaussianData g = GaussianData::from_amplitudes(0.3, 0.0, 1.0);
  const Domain dom = Domain::around(g, 512);
  const auto fan = launch_fan(g, Nu(0.2), dom, 2049, 5.0);
  const GridField r = reconstruct(fan, 5.0, dom);
  const GridField e = exact_field(g, Nu(0.2), 5.0, dom);
  for (std::size_t i = 0; i < r.V.size(); ++i) {
    CHECK(std::abs(r.V[i] - e.V[i]) < 1e-6);
    CHECK(std::abs(r.E[i] - e.E[i]) < 1e-6);
  }
  // density from the reconstructed field against (1 - s0) / F on the fan
  const auto N = density(r);
  for (const Characteristic& c : fan) {
    const double x = c.position(5.0);
    const double fi = (x + dom.d) / dom.h();
    const auto i = static_cast<std::size_t>(std::lround(fi));
    if (i < 2 || i + 2 >= N.size() || std::abs(fi - std::round(fi)) > 0.05) continue;
    CHECK(N[i] == doctest::Approx(c.density(5.0)).epsilon(5e-3));
  }
}

TEST_CASE("zero data reconstructs to zero") {
  const GaussianData g = GaussianData::from_amplitudes(0.0, 0.0, 1.0);
  const Domain dom = Domain::around(g, 64);
  const GridField r = reconstruct(launch_fan(g, Nu(0.2), dom, 65, 2.0), 2.0, dom);
  for (double v : r.V) CHECK(v == 0.0);
  for (double e : r.E) CHECK(e == 0.0);
}

TEST_CASE("reconstruction past a crossing is refused") {
  const GaussianData g = GaussianData::from_amplitudes(1.0, 0.0, 1.0);
  const Domain dom = Domain::around(g, 256);
  const auto fan = launch_fan(g, Nu(0.0), dom, 257, 3.0);
  CHECK_THROWS_AS(reconstruct(fan, 3.0, dom), CrossingBeforeT);
}

}  // TEST_SUITE
