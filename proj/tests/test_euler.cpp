#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "coldplasma/criterion.hpp"
#include "coldplasma/errors.hpp"
#include "coldplasma/euler.hpp"
#include "coldplasma/lagrange.hpp"

using namespace coldplasma;

namespace {

GridField blank(const Domain& dom, double tau) {
  GridField f;
  f.domain = dom;
  f.tau = tau;
  f.V.assign(static_cast<std::size_t>(dom.n_nodes()), 0.0);
  f.E.assign(static_cast<std::size_t>(dom.n_nodes()), 0.0);
  return f;
}

double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_SUITE("euler") {

TEST_CASE("equilibrium is preserved") {
  GridField f = blank(Domain{4.5, 64}, 1e-2);
  for (int i = 0; i < 50; ++i) {
    f = step(f, Nu(0.3));
    f.tau = 1e-2;
  }
  CHECK(*std::max_element(f.V.begin(), f.V.end()) == 0.0);
  CHECK(*std::max_element(f.E.begin(), f.E.end()) == 0.0);
  CHECK(f.steps == 50);
  CHECK(f.t == doctest::Approx(0.5));
}

TEST_CASE("density of a linear field") {
  GridField f = blank(Domain{1.0, 20}, 1e-2);
  for (int i = 0; i < f.domain.n_nodes(); ++i) {
    f.E[static_cast<std::size_t>(i)] = 0.3 * f.domain.node(i);
  }
  for (double n : density(f)) CHECK(n == doctest::Approx(0.7).epsilon(1e-13));
}

TEST_CASE("initial density at the centre") {
  const GaussianData g = GaussianData::from_amplitudes(0.4761, 0.0, 1.0);
  const GridField f = initial_field(g, Domain::around(g, 4096), 1e-3);
  CHECK(density(f)[2048] == doctest::Approx(1.0 - 0.4761).epsilon(1e-5));
}

TEST_CASE("density converges at second order") {
  const GaussianData g = GaussianData::from_amplitudes(0.4, 0.0, 1.0);
  double prev = 0.0;
  for (int n : {128, 256, 512}) {
    const Domain dom = Domain::around(g, n);
    const GridField f = initial_field(g, dom, 1e-3);
    const auto N = density(f);
    double err = 0.0;
    for (int i = 1; i < n; ++i) {
      const double exact = 1.0 - eval_profile(g, dom.node(i)).s0;
      err = std::max(err, std::abs(N[static_cast<std::size_t>(i)] - exact));
    }
    if (prev > 0.0) CHECK(prev / err == doctest::Approx(4.0).epsilon(0.1));
    prev = err;
  }
}

TEST_CASE("boundary nodes stay zero and fields stay finite") {
  const GaussianData g = GaussianData::from_amplitudes(0.3, 0.2, 1.0);
  RunSettings s;
  s.n_cells = 256;
  const RunOutcome out = run(g, Nu(0.2), 3.0, s, [](const GridField& f) {
    CHECK(f.V.size() == f.E.size());
    CHECK(f.V.size() == 257);
    CHECK(f.V.front() == 0.0);
    CHECK(f.V.back() == 0.0);
    CHECK(f.E.front() == 0.0);
    CHECK(f.E.back() == 0.0);
    CHECK(std::all_of(f.V.begin(), f.V.end(), [](double v) { return std::isfinite(v); }));
  });
  CHECK(out.status == RunStatus::CompletedSmooth);
  CHECK(out.final_state.t == 3.0);
  CHECK(out.max_abs_grad_history.size() == out.density_min_history.size());
}

TEST_CASE("a step beyond the CFL limit is refused") {
  GridField f = blank(Domain{1.0, 100}, 0.5);
  CHECK_THROWS_AS(step(f, Nu(0.0)), CflViolation);
  f.tau = 0.0;
  CHECK_THROWS_AS(step(f, Nu(0.0)), InvalidArgument);
}

TEST_CASE("the run clamps the step to the CFL limit") {
  const GaussianData g = GaussianData::from_amplitudes(0.0, 0.9, 1.0);
  RunSettings s;
  s.n_cells = 512;
  s.tau = 1.0;  // far above the limit
  StepLimits lim = s.limits;
  const RunOutcome out = run(g, Nu(0.5), 1.0, s, [&](const GridField& f) {
    if (f.steps > 0) {
      double vmax = 0.0;
      for (double v : f.V) vmax = std::max(vmax, std::abs(v));
      CHECK(f.tau * (vmax + lim.speed_margin) / f.domain.h() <= lim.cfl * 1.5);
    }
  });
  CHECK(out.status == RunStatus::CompletedSmooth);
}

TEST_CASE("uniform patch follows the characteristic ODE") {
  // a plateau far wider than the distance information travels by t = 2
  const Domain dom{20.0, 800};
  const double tau = 1e-2;
  GridField f = blank(dom, tau);
  const CharState init{0.3, -0.2};
  for (int i = 1; i < dom.n_cells; ++i) {
    if (std::abs(dom.node(i)) < 15.0) {
      f.V[static_cast<std::size_t>(i)] = init.V;
      f.E[static_cast<std::size_t>(i)] = init.E;
    }
  }
  double err_coarse = 0.0;
  for (double tau_run : {1e-2, 5e-3}) {
    GridField s = f;
    s.tau = tau_run;
    const int steps = static_cast<int>(std::lround(2.0 / tau_run));
    for (int k = 0; k < steps; ++k) {
      s = step(s, Nu(0.4));
      s.tau = tau_run;
    }
    const CharState exact = eval_VE(Nu(0.4), init, 2.0);
    const double err = std::max(std::abs(s.V[400] - exact.V), std::abs(s.E[400] - exact.E));
    CHECK(err < 1e-4);
    if (err_coarse > 0.0) CHECK(err_coarse / err > 3.5);
    err_coarse = err;
  }
}

TEST_CASE("artificial boundary is inert on smooth runs") {
  const GaussianData g = GaussianData::from_amplitudes(0.3, 0.0, 1.0);
  RunSettings near;
  near.n_cells = 900;
  near.tau = 4e-3;
  RunSettings far = near;
  far.n_cells = 1200;  // same h with d = 6
  far.d_factor = 6.0;
  const RunOutcome a = run(g, Nu(0.2), 5.0, near);
  const RunOutcome b = run(g, Nu(0.2), 5.0, far);
  double diff = 0.0;
  for (int i = 0; i <= 900; ++i) {
    const auto ia = static_cast<std::size_t>(i);
    const auto ib = static_cast<std::size_t>(i + 150);
    diff = std::max({diff, std::abs(a.final_state.V[ia] - b.final_state.V[ib]),
                     std::abs(a.final_state.E[ia] - b.final_state.E[ib])});
  }
  CHECK(diff <= 1e-10);
}

TEST_CASE("smooth run matches the characteristic solution") {
  const GaussianData g = GaussianData::from_amplitudes(0.3, 0.0, 1.0);
  RunSettings s;
  s.n_cells = 512;
  s.tau = 0.4 * 9.0 / 512;
  const RunOutcome out = run(g, Nu(0.2), 5.0, s);
  REQUIRE(out.status == RunStatus::CompletedSmooth);
  const GridField ex = exact_field(g, Nu(0.2), 5.0, out.final_state.domain);
  CHECK(sup_diff(out.final_state.E, ex.E) < 1e-4);
  CHECK(sup_diff(out.final_state.V, ex.V) < 1e-4);
}

TEST_CASE("breakdown is reported with a time inside the horizon") {
  const GaussianData g = GaussianData::from_amplitudes(0.9, 0.0, 1.0);
  RunSettings s;
  s.n_cells = 512;
  s.detection.g_max = 5.0;
  const RunOutcome out = run(g, Nu(0.0), 5.0, s);
  REQUIRE(out.status == RunStatus::BrokeDown);
  REQUIRE(out.t_break.has_value());
  CHECK(*out.t_break > 0.0);
  CHECK(*out.t_break <= 5.0);
  CHECK(*out.t_break >= out.final_state.t);
  CHECK(*out.t_break - out.final_state.t <= s.tau);
}

TEST_CASE("zero data completes with all-zero series") {
  const GaussianData g = GaussianData::from_amplitudes(0.0, 0.0, 1.0);
  RunSettings s;
  s.n_cells = 64;
  const RunOutcome out = run(g, Nu(0.2), 1.0, s);
  CHECK(out.status == RunStatus::CompletedSmooth);
  for (const TimeSample& ts : out.max_abs_grad_history) CHECK(ts.value == 0.0);
  for (const TimeSample& ts : out.density_min_history) CHECK(ts.value == 1.0);
}

TEST_CASE("invalid run arguments") {
  const GaussianData g = GaussianData::from_amplitudes(0.3, 0.0, 1.0);
  CHECK_THROWS_AS(run(g, Nu(0.2), 0.0), InvalidArgument);
  RunSettings s;
  s.tau = -1.0;
  CHECK_THROWS_AS(run(g, Nu(0.2), 1.0, s), InvalidArgument);
  s = {};
  s.n_cells = 1;
  CHECK_THROWS_AS(run(g, Nu(0.2), 1.0, s), InvalidArgument);
}

}  // TEST_SUITE
