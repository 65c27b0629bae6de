#include <cstdio>
#include <charconv>
#include <exception>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tumorstab/errors.hpp"
#include "tumorstab/evolution.hpp"
#include "tumorstab/hyperbolics.hpp"
#include "tumorstab/report.hpp"
#include "tumorstab/spectrum.hpp"
#include "tumorstab/stationary.hpp"

namespace {

using namespace tumorstab;

constexpr double kEpsilon = 0.1;  // fixed surface perturbation amplitude

struct RunConfig {
  ModelParams params;
  double rho0 = 0.0;
  bool rho0_given = false;
  int grid_n = 512;
  double tol = 1e-10;
  std::string out;
  std::string format = "json";
  double t_end = 1.0;
  std::string modes;
  int jmax = 0;
};

ModelParams resolve_params(const RunConfig& cfg) {
  ModelParams p = cfg.params;
  if (cfg.rho0_given) p.sigma_tilde = p.sigma_bar * tanh_over_rho(cfg.rho0);
  p.validate();
  return p;
}

double resolve_rho0(const RunConfig& cfg) {
  if (cfg.rho0_given) return cfg.rho0;
  return solve_rho_s(resolve_params(cfg));
}

const char* from_chars_end(const char* first, const char* last, int& value) {
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{}) throw std::invalid_argument("bad --modes entry");
  return res.ptr;
}

const char* from_chars_end(const char* first, const char* last, double& value) {
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc{}) throw std::invalid_argument("bad --modes entry");
  return res.ptr;
}

std::vector<InitialMode> parse_modes(const std::string& text) {
  std::vector<InitialMode> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    if (!item.empty()) {
      const char* p = item.data();
      const char* last = p + item.size();
      int n = 0, m = 0;
      double amp = 0.0;
      try {
        p = from_chars_end(p, last, n);
        if (p == last || *p != ',') throw std::invalid_argument("");
        p = from_chars_end(p + 1, last, m);
        if (p == last || *p != ',') throw std::invalid_argument("");
        p = from_chars_end(p + 1, last, amp);
        if (p != last) throw std::invalid_argument("");
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad --modes entry '" + item +
                                    "' (expected n,m,amp)");
      }
      InitialMode im;
      im.mode = ModeIndex::make(n, m);
      im.parity = Parity::cos_cos;
      im.rho0_0 = amp;
      im.rho1_0 = 0.0;
      out.push_back(im);
    }
    start = end + 1;
  }
  return out;
}

struct RunResult {
  std::string output;
  int exit_code = 0;
};

RunResult cmd_stationary(const RunConfig& cfg) {
  const ModelParams params = resolve_params(cfg);
  const StationaryState state = solve_stationary(params, cfg.grid_n, cfg.tol);
  return {stationary_json(params, cfg.grid_n, cfg.tol, state), 0};
}

RunResult cmd_spectrum(const RunConfig& cfg) {
  const double rho0 = resolve_rho0(cfg);
  const SpectrumTable table = mu_star(rho0, cfg.params.sigma_bar, cfg.jmax);
  if (cfg.format == "csv") return {spectrum_csv(table), 0};
  return {spectrum_json(table), 0};
}

RunResult cmd_mu_star(const RunConfig& cfg) {
  const double rho0 = resolve_rho0(cfg);
  const SpectrumTable table = mu_star(rho0, cfg.params.sigma_bar, cfg.jmax);
  return {mu_star_json(table), 0};
}

RunResult cmd_table1(const RunConfig&) {
  const Table1Report report = table1_report();
  return {table1_json(report), report.all_pass ? 0 : 1};
}

RunResult cmd_evolve(const RunConfig& cfg) {
  const ModelParams params = resolve_params(cfg);
  const std::vector<InitialMode> initial = parse_modes(cfg.modes);
  std::vector<double> times(101);
  for (int i = 0; i <= 100; ++i) times[i] = cfg.t_end * i / 100.0;
  std::vector<ModeTrajectory> trajectories;
  trajectories.reserve(initial.size());
  for (const InitialMode& im : initial)
    trajectories.push_back(
        evolve_mode(im.mode, params, im.rho0_0, im.rho1_0, times));
  const SurfaceSnapshot surface =
      synthesize_surface(initial, params, kEpsilon, cfg.t_end);
  return {evolve_json(params, cfg.t_end, kEpsilon, trajectories, surface), 0};
}

RunResult cmd_crossover(const RunConfig& cfg) {
  const double rho_bar = crossover_rho_bar(cfg.params.sigma_bar);
  return {crossover_json(cfg.params.sigma_bar, rho_bar), 0};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stationary layers and linear stability of a delayed tumor "
               "free-boundary model"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto* rho0_opt =
      app.add_option("--rho0", cfg.rho0,
                     "Flat layer thickness; sets sigma_tilde = sigma_bar tanh(rho0)/rho0")
          ->check(CLI::PositiveNumber);
  app.add_option("--sigma-bar", cfg.params.sigma_bar, "External nutrient level")
      ->check(CLI::PositiveNumber);
  auto* st_opt = app.add_option("--sigma-tilde", cfg.params.sigma_tilde,
                                "Proliferation threshold")
                     ->check(CLI::PositiveNumber);
  rho0_opt->excludes(st_opt);
  st_opt->excludes(rho0_opt);
  app.add_option("--mu", cfg.params.mu, "Aggressiveness constant")
      ->check(CLI::PositiveNumber);
  app.add_option("--tau", cfg.params.tau, "Replication delay")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--grid-n", cfg.grid_n, "Pressure grid intervals")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tol, "Outer solve tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "Output file (default stdout)");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--t-end", cfg.t_end, "Evolution horizon")
      ->check(CLI::PositiveNumber);
  app.add_option("--modes", cfg.modes,
                 "Initial surface modes as n,m,amp;n,m,amp;...");
  app.add_option("--jmax", cfg.jmax, "Mode scan cutoff (0 = automatic)")
      ->check(CLI::NonNegativeNumber);

  app.add_subcommand("stationary", "Solve the flat stationary layer")->fallthrough();
  app.add_subcommand("spectrum", "Per-mode thresholds across admissible j")->fallthrough();
  app.add_subcommand("mu-star", "Instability threshold and its argmin mode")->fallthrough();
  app.add_subcommand("table1", "Reference thresholds at four thicknesses")->fallthrough();
  app.add_subcommand("evolve", "Evolve surface modes and synthesize the surface")->fallthrough();
  app.add_subcommand("crossover", "Thickness where the argmin mode becomes j=1")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.rho0_given = rho0_opt->count() > 0;

  const std::string cmd = app.get_subcommands().front()->get_name();
  RunResult result;
  try {
    if (cfg.format == "csv" && cmd != "spectrum")
      throw std::invalid_argument("csv format is only available for spectrum");
    if (cmd == "stationary")
      result = cmd_stationary(cfg);
    else if (cmd == "spectrum")
      result = cmd_spectrum(cfg);
    else if (cmd == "mu-star")
      result = cmd_mu_star(cfg);
    else if (cmd == "table1")
      result = cmd_table1(cfg);
    else if (cmd == "evolve")
      result = cmd_evolve(cfg);
    else
      result = cmd_crossover(cfg);
  } catch (const io_error& e) {
    std::fputs(error_json("io", e.what()).c_str(), stdout);
    return 4;
  } catch (const solve_error& e) {
    std::fputs(error_json("numerical", e.what()).c_str(), stdout);
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fputs(error_json("validation", e.what()).c_str(), stdout);
    return 2;
  } catch (const std::domain_error& e) {
    std::fputs(error_json("validation", e.what()).c_str(), stdout);
    return 2;
  } catch (const std::exception& e) {
    std::fputs(error_json("numerical", e.what()).c_str(), stdout);
    return 3;
  }

  if (cfg.out.empty()) {
    std::fputs(result.output.c_str(), stdout);
  } else {
    try {
      write_text_atomic(cfg.out, result.output);
    } catch (const io_error& e) {
      std::fputs(error_json("io", e.what()).c_str(), stdout);
      return 4;
    }
  }
  return result.exit_code;
}
