#include "tumorstab/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <system_error>

#include "json.hpp"
#include "tumorstab/errors.hpp"

namespace tumorstab {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

// JSON has no infinity literal; emit the same text as the CSV, quoted.
ordered_json num(double x) {
  if (std::isfinite(x)) return x;
  return format_double(x);
}

ordered_json num_array(const std::vector<double>& xs) {
  ordered_json arr = ordered_json::array();
  for (double x : xs) arr.push_back(num(x));
  return arr;
}

ordered_json params_block(const ModelParams& p) {
  ordered_json j;
  j["sigma_bar"] = num(p.sigma_bar);
  j["sigma_tilde"] = num(p.sigma_tilde);
  j["mu"] = num(p.mu);
  j["tau"] = num(p.tau);
  return j;
}

ordered_json mode_block(const ModeIndex& mode) {
  ordered_json j;
  j["n"] = mode.n;
  j["m"] = mode.m;
  j["j"] = mode.j;
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

const char* parity_name(Parity p) {
  switch (p) {
    case Parity::cos_cos: return "cos_cos";
    case Parity::cos_sin: return "cos_sin";
    case Parity::sin_cos: return "sin_cos";
    case Parity::sin_sin: return "sin_sin";
  }
  return "cos_cos";
}

}  // namespace

Table1Report table1_report() {
  struct Reference {
    double rho0, mu_star, rel_tol, j0_lo, j0_hi;
    int argmin_j;
  };
  static constexpr Reference kReference[] = {
      {0.25, 62088.0, 2e-3, 47.0, 48.0, 81},
      {0.5, 2088.3, 1e-3, 11.0, 12.0, 20},
      {1.0, 84.054, 1e-3, 2.0, 3.0, 5},
      {2.0, 5.1560, 1e-3, 0.6, 0.7, 1},
  };

  Table1Report report;
  report.sigma_bar = 1.0;
  report.all_pass = true;
  for (const Reference& ref : kReference) {
    const SpectrumTable table = mu_star(ref.rho0, report.sigma_bar);
    Table1Row row;
    row.rho0 = ref.rho0;
    row.j0 = table.j0;
    row.mu_star = table.mu_star;
    row.argmin_mode = table.argmin_mode;
    row.j_scan_limit = table.j_scan_limit;
    row.j0_lo = ref.j0_lo;
    row.j0_hi = ref.j0_hi;
    row.expected_argmin_j = ref.argmin_j;
    row.reference_mu_star = ref.mu_star;
    row.rel_tol = ref.rel_tol;
    row.rel_error = std::abs(table.mu_star - ref.mu_star) / ref.mu_star;
    row.pass = row.rel_error <= ref.rel_tol && table.j0 > ref.j0_lo &&
               table.j0 < ref.j0_hi && table.argmin_mode.j == ref.argmin_j;
    report.all_pass = report.all_pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

std::string stationary_json(const ModelParams& params, int grid_n, double tol,
                            const StationaryState& state) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "stationary";
  j["params"] = params_block(params);
  j["grid_n"] = grid_n;
  j["tol"] = num(tol);
  j["rho_s"] = num(state.rho_s);
  j["rho_star"] = num(state.rho_star);
  j["iterations"] = state.iterations;
  j["outer_iterations"] = state.outer_iterations;
  j["residual"] = num(state.residual);
  j["contraction_factor"] = num(state.contraction_factor);
  ordered_json pressure;
  pressure["lo"] = num(state.pressure.lo());
  pressure["hi"] = num(state.pressure.hi());
  pressure["values"] = num_array(state.pressure.values());
  pressure["deriv"] = num_array(state.pressure.deriv());
  j["pressure"] = pressure;
  return dump(j);
}

std::string mu_star_json(const SpectrumTable& table) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "mu-star";
  j["rho0"] = num(table.rho0);
  j["sigma_bar"] = num(table.sigma_bar);
  j["j0"] = num(table.j0);
  j["mu_star"] = num(table.mu_star);
  j["argmin_mode"] = mode_block(table.argmin_mode);
  j["j_scan_limit"] = table.j_scan_limit;
  j["argmin_tie"] = table.argmin_tie;
  ordered_json entries = ordered_json::array();
  for (const SpectrumEntry& e : table.entries) {
    ordered_json row;
    row["j"] = e.j;
    row["admissible"] = e.admissible;
    row["n"] = e.n;
    row["m"] = e.m;
    row["k1"] = num(e.k1);
    row["k2"] = num(e.k2);
    row["mu_j"] = num(e.mu_j);
    entries.push_back(row);
  }
  j["entries"] = entries;
  return dump(j);
}

std::string spectrum_json(const SpectrumTable& table) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "spectrum";
  j["rho0"] = num(table.rho0);
  j["sigma_bar"] = num(table.sigma_bar);
  j["j0"] = num(table.j0);
  j["j_scan_limit"] = table.j_scan_limit;
  ordered_json rows = ordered_json::array();
  for (const SpectrumEntry& e : table.entries) {
    if (!e.admissible) continue;
    ordered_json row;
    row["j"] = e.j;
    row["n"] = e.n;
    row["m"] = e.m;
    row["k1"] = num(e.k1);
    row["k2"] = num(e.k2);
    row["mu_j"] = num(e.mu_j);
    rows.push_back(row);
  }
  j["rows"] = rows;
  return dump(j);
}

std::string table1_json(const Table1Report& report) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "table1";
  j["sigma_bar"] = num(report.sigma_bar);
  ordered_json rows = ordered_json::array();
  for (const Table1Row& r : report.rows) {
    ordered_json row;
    row["rho0"] = num(r.rho0);
    row["j0"] = num(r.j0);
    row["j0_bracket"] = {num(r.j0_lo), num(r.j0_hi)};
    row["j0_in_bracket"] = r.j0 > r.j0_lo && r.j0 < r.j0_hi;
    row["argmin_j"] = r.argmin_mode.j;
    row["expected_argmin_j"] = r.expected_argmin_j;
    row["argmin_match"] = r.argmin_mode.j == r.expected_argmin_j;
    row["witness"] = mode_block(r.argmin_mode);
    row["mu_star"] = num(r.mu_star);
    row["reference_mu_star"] = num(r.reference_mu_star);
    row["rel_tol"] = num(r.rel_tol);
    row["rel_error"] = num(r.rel_error);
    row["mu_star_match"] = r.rel_error <= r.rel_tol;
    row["j_scan_limit"] = r.j_scan_limit;
    row["pass"] = r.pass;
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["all_pass"] = report.all_pass;
  return dump(j);
}

std::string crossover_json(double sigma_bar, double rho_bar) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "crossover";
  j["sigma_bar"] = num(sigma_bar);
  j["rho_bar"] = num(rho_bar);
  return dump(j);
}

std::string evolve_json(const ModelParams& params, double t_end, double epsilon,
                        const std::vector<ModeTrajectory>& trajectories,
                        const SurfaceSnapshot& surface) {
  ordered_json j;
  j["schema"] = 1;
  j["command"] = "evolve";
  j["params"] = params_block(params);
  j["t_end"] = num(t_end);
  j["epsilon"] = num(epsilon);
  j["rho_star"] = num(surface.rho_star);
  ordered_json times = ordered_json::array();
  if (!trajectories.empty()) times = num_array(trajectories.front().times);
  j["times"] = times;
  ordered_json modes = ordered_json::array();
  for (std::size_t i = 0; i < trajectories.size(); ++i) {
    const ModeTrajectory& tr = trajectories[i];
    ordered_json mode;
    mode["n"] = tr.mode.n;
    mode["m"] = tr.mode.m;
    mode["j"] = tr.mode.j;
    mode["parity"] = parity_name(surface.modes[i].parity);
    mode["h"] = num(tr.h);
    mode["k1_coeff"] = num(tr.k1_coeff);
    mode["classification"] = tr.classification;
    mode["rho0_0"] = num(tr.rho0_0);
    mode["rho1_0"] = num(tr.rho1_0);
    mode["rho0_t"] = num_array(tr.rho0_t);
    mode["rho1_t"] = num_array(tr.rho1_t);
    mode["amplitude_end"] = num(surface.modes[i].amplitude);
    modes.push_back(mode);
  }
  j["modes"] = modes;
  ordered_json surf;
  surf["grid_size"] = surface.grid_size;
  surf["heights"] = num_array(surface.heights);
  j["surface"] = surf;
  return dump(j);
}

std::string error_json(const std::string& type, const std::string& message) {
  ordered_json j;
  j["schema"] = 1;
  ordered_json err;
  err["type"] = type;
  err["message"] = message;
  j["error"] = err;
  return dump(j);
}

std::string spectrum_csv(const SpectrumTable& table) {
  std::string out = "j,n,m,k1,k2,mu_j\n";
  for (const SpectrumEntry& e : table.entries) {
    if (!e.admissible) continue;
    out += std::to_string(e.j);
    out += ',';
    out += std::to_string(e.n);
    out += ',';
    out += std::to_string(e.m);
    out += ',';
    out += format_double(e.k1);
    out += ',';
    out += format_double(e.k2);
    out += ',';
    out += format_double(e.mu_j);
    out += '\n';
  }
  return out;
}

void write_text_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open " + tmp + " for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) throw io_error("short write to " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignore;
    std::filesystem::remove(tmp, ignore);
    throw io_error("cannot move " + tmp + " to " + path + ": " + ec.message());
  }
}

}  // namespace tumorstab
