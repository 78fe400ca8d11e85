#include "coldplasma/scenario.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <thread>
#include <vector>

#include "coldplasma/criterion.hpp"
#include "coldplasma/euler.hpp"
#include "coldplasma/lagrange.hpp"
#include "coldplasma/profiles.hpp"

namespace coldplasma {
namespace {

constexpr std::array<std::pair<Mode, std::string_view>, 9> kModeNames{{
    {Mode::Classify, "classify"},
    {Mode::Separatrix, "separatrix"},
    {Mode::SimulateEuler, "simulate-euler"},
    {Mode::SimulateLagrange, "simulate-lagrange"},
    {Mode::Compare, "compare"},
    {Mode::Figure2, "figure2"},
    {Mode::Figure3, "figure3"},
    {Mode::Figure4, "figure4"},
    {Mode::Figure5, "figure5"},
}};

// Comma separated record writer; doubles in shortest round-trip form.
class Csv {
 public:
  explicit Csv(std::ostream& os) : os_(os) {}

  template <class... Ts>
  void row(const Ts&... fields) {
    bool first = true;
    ((os_ << (first ? "" : ","), put(fields), first = false), ...);
    os_ << '\n';
  }

 private:
  void put(double v) {
    std::array<char, 32> buf;
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    os_.write(buf.data(), res.ptr - buf.data());
  }
  template <class T>
  void put(const T& v) {
    os_ << v;
  }

  std::ostream& os_;
};

GaussianData profile_of(const RunConfig& c) {
  if (c.a_star) return GaussianData::from_scales(*c.a_star, c.rho_star, c.k2);
  return GaussianData::from_amplitudes(c.k1, c.k2, c.rho_star);
}

RunSettings settings_of(const RunConfig& c) {
  RunSettings s;
  s.n_cells = c.n_cells;
  s.tau = c.tau;
  s.limits.cfl = c.cfl;
  s.detection = {c.g_max, c.n_floor, c.n_ceil};
  return s;
}

std::string_view region_name(Region r) {
  return r == Region::Blowup ? "blowup" : "smooth";
}

std::string_view status_name(RunStatus s) {
  return s == RunStatus::BrokeDown ? "BrokeDown" : "CompletedSmooth";
}

double center_density(const GridField& f) {
  return density(f)[static_cast<std::size_t>(f.domain.n_cells / 2)];
}

int classify_mode(const RunConfig& c, std::ostream& data, std::ostream& log) {
  Csv csv(data);
  const Nu nu(c.nu);
  if (c.s0 || c.q0) {
    const double s0 = c.s0.value_or(0.0);
    const double q0 = c.q0.value_or(0.0);
    const Classification cls = classify(nu, {q0, s0});
    csv.row("nu", "s0", "q0", "region", "t_break");
    if (cls.breaking_time) {
      csv.row(c.nu, s0, q0, region_name(cls.region), *cls.breaking_time);
    } else {
      csv.row(c.nu, s0, q0, region_name(cls.region), "");
    }
    log << region_name(cls.region) << '\n';
    return kExitOk;
  }
  const GaussianData data_profile = profile_of(c);
  const Domain domain = Domain::around(data_profile, c.n_cells);
  const auto samples = sample_gradients(data_profile, domain);
  const auto t_br = breaking_time_field(nu, samples);
  csv.row("nu", "k1", "k2", "rho_star", "region", "t_break");
  if (t_br) {
    csv.row(c.nu, data_profile.k1, data_profile.k2, c.rho_star, "blowup", *t_br);
  } else {
    csv.row(c.nu, data_profile.k1, data_profile.k2, c.rho_star, "smooth", "");
  }
  log << (t_br ? "blowup" : "smooth") << '\n';
  return kExitOk;
}

int separatrix_mode(const RunConfig& c, std::ostream& data, std::ostream& log) {
  Csv csv(data);
  const Nu nu(c.nu);
  csv.row("nu", "q0", "s0");
  int skipped = 0;
  for (int i = 0; i < c.points; ++i) {
    const double q0 = c.q_min + (c.q_max - c.q_min) * i / (c.points - 1);
    try {
      csv.row(c.nu, q0, separatrix_s0(nu, q0));
    } catch (const NoRoot&) {
      ++skipped;
    }
  }
  if (skipped > 0) log << skipped << " q0 values have no separatrix point\n";
  return kExitOk;
}

int euler_mode(const RunConfig& c, std::ostream& data, std::ostream& log) {
  Csv csv(data);
  const RunOutcome out =
      run(profile_of(c), Nu(c.nu), c.horizon, settings_of(c));
  csv.row("t", "max_abs_grad", "min_density");
  for (std::size_t i = 0; i < out.max_abs_grad_history.size(); ++i) {
    csv.row(out.max_abs_grad_history[i].t, out.max_abs_grad_history[i].value,
            out.density_min_history[i].value);
  }
  log << "status=" << status_name(out.status);
  if (out.t_break) log << " t_break=" << std::setprecision(17) << *out.t_break;
  log << '\n';
  return kExitOk;
}

int lagrange_mode(const RunConfig& c, std::ostream& data, std::ostream& log) {
  Csv csv(data);
  const GaussianData profile = profile_of(c);
  const Nu nu(c.nu);
  const Domain domain = Domain::around(profile, c.n_cells);
  const auto fan = launch_fan(profile, nu, domain, c.fan, c.horizon);
  double t_end = c.horizon;
  if (const auto tc = detect_crossing(fan, c.horizon)) {
    log << "crossing at t=" << std::setprecision(17) << *tc << '\n';
    t_end = std::max(0.0, *tc - 1e-3);
  }
  const GridField f = reconstruct(fan, t_end, domain);
  const auto N = density(f);
  csv.row("t", "x", "V", "E", "N");
  for (int i = 0; i < domain.n_nodes(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    csv.row(t_end, domain.node(i), f.V[k], f.E[k], N[k]);
  }
  return kExitOk;
}

int compare_mode(const RunConfig& c, std::ostream& data, std::ostream& log) {
  Csv csv(data);
  const GaussianData profile = profile_of(c);
  const Nu nu(c.nu);
  const RunOutcome out = run(profile, nu, c.horizon, settings_of(c));
  if (out.status == RunStatus::BrokeDown) {
    log << "Eulerian run broke down at t=" << *out.t_break << '\n';
    return kExitNumericalFailure;
  }
  const GridField& eu = out.final_state;
  const GridField ex = exact_field(profile, nu, eu.t, eu.domain);
  csv.row("x", "V_euler", "E_euler", "V_lagrange", "E_lagrange");
  double dv = 0.0;
  double de = 0.0;
  for (int i = 0; i < eu.domain.n_nodes(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    csv.row(eu.domain.node(i), eu.V[k], eu.E[k], ex.V[k], ex.E[k]);
    dv = std::max(dv, std::abs(eu.V[k] - ex.V[k]));
    de = std::max(de, std::abs(eu.E[k] - ex.E[k]));
  }
  log << std::setprecision(6) << "sup|dV|=" << dv << " sup|dE|=" << de << '\n';
  return kExitOk;
}

int figure2_mode(const RunConfig& c, std::ostream& data, std::ostream&) {
  Csv csv(data);
  csv.row("nu", "t", "N0");
  const GaussianData profile = GaussianData::from_amplitudes(0.4761, 0.0, c.rho_star);
  for (double nu : {0.0, 0.2, 2.2}) {
    run(profile, Nu(nu), c.horizon, settings_of(c), [&](const GridField& f) {
      csv.row(nu, f.t, center_density(f));
    });
  }
  return kExitOk;
}

int figure3_mode(const RunConfig& c, std::ostream& data, std::ostream& log) {
  Csv csv(data);
  csv.row("nu", "k", "t_br");
  const std::array<double, 2> nus{0.0, 0.2};
  const auto n = static_cast<std::size_t>(c.k_points);
  // one slot per (nu, k); filled by workers, written in order
  std::vector<std::optional<double>> t_br(nus.size() * n);
  auto k_at = [&](std::size_t i) {
    return n == 1 ? c.k_min : c.k_min + (c.k_max - c.k_min) * i / (n - 1);
  };
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t j = begin; j < t_br.size(); j += stride) {
      const GaussianData p = GaussianData::from_amplitudes(k_at(j % n), 0.0, c.rho_star);
      const auto samples = sample_gradients(p, Domain::around(p, c.n_cells));
      t_br[j] = breaking_time_field(Nu(nus[j / n]), samples);
    }
  };
  const unsigned workers = worker_count(c);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w, workers);
  work(0, workers);
  for (auto& th : pool) th.join();

  for (std::size_t j = 0; j < t_br.size(); ++j) {
    if (t_br[j]) csv.row(nus[j / n], k_at(j % n), *t_br[j]);
  }
  log << "workers=" << workers << '\n';
  return kExitOk;
}

void write_snapshot(Csv& csv, const GridField& f) {
  for (int i = 0; i < f.domain.n_nodes(); ++i) {
    csv.row(f.t, f.domain.node(i), f.E[static_cast<std::size_t>(i)]);
  }
}

int figure4_mode(const RunConfig& c, std::ostream& data, std::ostream& log) {
  Csv csv(data);
  const Nu nu(0.2);
  const CriticalAmplitude crit = k_cr_underdamped(nu);
  const GaussianData profile = GaussianData::from_amplitudes(crit.k_cr, 0.0, c.rho_star);
  const RunSettings s = settings_of(c);
  const GridField start = initial_field(profile, Domain::around(profile, c.n_cells), s.tau);
  const RunOutcome out = evolve(start, nu, crit.t_break_at_threshold, s);
  csv.row("t", "x", "E");
  write_snapshot(csv, start);
  write_snapshot(csv, out.final_state);
  if (out.t_break) log << "detection fired at t=" << *out.t_break << '\n';
  return kExitOk;
}

int figure5_mode(const RunConfig& c, std::ostream& data, std::ostream& log) {
  Csv csv(data);
  const Nu nu(2.5);
  const CriticalAmplitude crit = k_cr_overdamped(nu);
  const GaussianData profile = GaussianData::from_amplitudes(0.0, crit.k_cr, c.rho_star);
  const RunSettings s = settings_of(c);
  GridField state = initial_field(profile, Domain::around(profile, c.n_cells), s.tau);
  csv.row("t", "x", "E");
  for (double frac : {0.25, 0.5, 1.0}) {
    RunOutcome out = evolve(std::move(state), nu, frac * crit.t_break_at_threshold, s);
    state = std::move(out.final_state);
    write_snapshot(csv, state);
    if (out.t_break) {
      log << "detection fired at t=" << *out.t_break << '\n';
      break;
    }
  }
  return kExitOk;
}

}  // namespace

std::optional<Mode> parse_mode(std::string_view name) {
  for (const auto& [mode, text] : kModeNames) {
    if (text == name) return mode;
  }
  return std::nullopt;
}

std::string_view to_string(Mode mode) {
  for (const auto& [m, text] : kModeNames) {
    if (m == mode) return text;
  }
  return "unknown";
}

void validate(const RunConfig& c) {
  auto positive = [](double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ConfigError(std::string(what) + " must be positive");
    }
  };
  if (!(c.nu >= 0.0) || !std::isfinite(c.nu)) throw ConfigError("nu must be >= 0");
  if (!std::isfinite(c.k1) || !std::isfinite(c.k2)) {
    throw ConfigError("amplitudes must be finite");
  }
  positive(c.rho_star, "rho-star");
  positive(c.tau, "tau");
  positive(c.cfl, "cfl");
  positive(c.horizon, "horizon");
  positive(c.g_max, "gmax");
  positive(c.n_ceil, "n-ceil");
  if (c.n_cells < 4 || c.n_cells % 2 != 0) {
    throw ConfigError("cells must be an even number >= 4");
  }
  if (c.fan < 4) throw ConfigError("fan must be >= 4");
  if (c.s0 && !(*c.s0 <= 1.0)) throw ConfigError("s0 must be <= 1");
  if (c.mode == Mode::Separatrix && (c.points < 2 || !(c.q_min <= c.q_max))) {
    throw ConfigError("separatrix needs points >= 2 and q-min <= q-max");
  }
  if (c.mode == Mode::Figure3 && (c.k_points < 1 || !(c.k_min <= c.k_max))) {
    throw ConfigError("figure3 needs k-points >= 1 and k-min <= k-max");
  }
  if (c.mode == Mode::Figure3 && !(c.k_max <= 1.0)) {
    throw ConfigError("figure3 amplitudes must not exceed 1");
  }
  if (c.threads < 0) throw ConfigError("threads must be >= 0");
}

unsigned worker_count(const RunConfig& config) {
  unsigned n = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                  : std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("PLASMA_THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v > 0) n = std::min(n, static_cast<unsigned>(v));
  }
  return std::max(1u, n);
}

int run_scenario(const RunConfig& config, std::ostream& data,
                 std::ostream& log) {
  try {
    validate(config);
    switch (config.mode) {
      case Mode::Classify:
        return classify_mode(config, data, log);
      case Mode::Separatrix:
        return separatrix_mode(config, data, log);
      case Mode::SimulateEuler:
        return euler_mode(config, data, log);
      case Mode::SimulateLagrange:
        return lagrange_mode(config, data, log);
      case Mode::Compare:
        return compare_mode(config, data, log);
      case Mode::Figure2:
        return figure2_mode(config, data, log);
      case Mode::Figure3:
        return figure3_mode(config, data, log);
      case Mode::Figure4:
        return figure4_mode(config, data, log);
      case Mode::Figure5:
        return figure5_mode(config, data, log);
    }
  } catch (const InvalidArgument& e) {
    log << "invalid configuration: " << e.what() << '\n';
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    log << "numerical failure: " << e.what() << '\n';
    return kExitNumericalFailure;
  }
  return kExitInvalidConfig;
}

}  // namespace coldplasma
