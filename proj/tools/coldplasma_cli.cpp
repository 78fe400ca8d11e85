// coldplasma: breaking thresholds and simulations of cold plasma oscillations
// with electron-ion collisions.
//
//   coldplasma --mode classify --nu 0 --s0 0.6 --q0 0
//   coldplasma --mode figure3 --out fig3.csv
//   coldplasma --config run.ini --nu 0.5

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "coldplasma/scenario.hpp"

int main(int argc, char** argv) {
  using namespace coldplasma;

  RunConfig cfg;
  std::string mode_name = "classify";
  std::string out_path;
  std::optional<double> s0;
  std::optional<double> q0;
  std::optional<double> a_star;

  CLI::App app{"Cold plasma oscillations with electron-ion collisions"};
  app.set_config("--config", "", "key=value run configuration file");
  app.add_option("--mode", mode_name,
                 "classify | separatrix | simulate-euler | simulate-lagrange | "
                 "compare | figure2 | figure3 | figure4 | figure5")
      ->capture_default_str();
  app.add_option("--nu", cfg.nu, "collision frequency")->capture_default_str();
  app.add_option("--k1", cfg.k1, "field amplitude")->capture_default_str();
  app.add_option("--k2", cfg.k2, "velocity amplitude")->capture_default_str();
  app.add_option("--rho-star", cfg.rho_star, "localisation scale")
      ->capture_default_str();
  app.add_option("--a-star", a_star, "field scale; sets k1 = (a*/rho*)^2");
  app.add_option("--s0", s0, "pointwise dE/dx for classify");
  app.add_option("--q0", q0, "pointwise dV/dx for classify");
  app.add_option("--q-min", cfg.q_min)->capture_default_str();
  app.add_option("--q-max", cfg.q_max)->capture_default_str();
  app.add_option("--points", cfg.points, "separatrix samples")
      ->capture_default_str();
  app.add_option("--k-min", cfg.k_min)->capture_default_str();
  app.add_option("--k-max", cfg.k_max)->capture_default_str();
  app.add_option("--k-points", cfg.k_points)->capture_default_str();
  app.add_option("--cells", cfg.n_cells, "grid cells")->capture_default_str();
  app.add_option("--tau", cfg.tau, "time step")->capture_default_str();
  app.add_option("--cfl", cfg.cfl, "Courant limit")->capture_default_str();
  app.add_option("--horizon", cfg.horizon, "final time")->capture_default_str();
  app.add_option("--gmax", cfg.g_max, "gradient breakdown threshold")
      ->capture_default_str();
  app.add_option("--n-floor", cfg.n_floor)->capture_default_str();
  app.add_option("--n-ceil", cfg.n_ceil)->capture_default_str();
  app.add_option("--fan", cfg.fan, "Lagrangian characteristics")
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "sweep workers (0 = auto)")
      ->capture_default_str();
  app.add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalidConfig;
  }

  const auto mode = parse_mode(mode_name);
  if (!mode) {
    std::cerr << "unknown mode: " << mode_name << '\n';
    return kExitInvalidConfig;
  }
  cfg.mode = *mode;
  cfg.s0 = s0;
  cfg.q0 = q0;
  cfg.a_star = a_star;

  if (out_path.empty()) return run_scenario(cfg, std::cout, std::cerr);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot open " << out_path << '\n';
    return kExitInvalidConfig;
  }
  return run_scenario(cfg, out, std::cerr);
}
