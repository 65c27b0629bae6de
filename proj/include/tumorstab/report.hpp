#pragma once

#include <string>
#include <vector>

#include "tumorstab/evolution.hpp"
#include "tumorstab/spectrum.hpp"
#include "tumorstab/stationary.hpp"

namespace tumorstab {

// Shortest decimal string that parses back to exactly x; infinities become
// "inf" / "-inf".
std::string format_double(double x);

// One row of the reference-threshold comparison at sigma_bar = 1.
struct Table1Row {
  double rho0 = 0.0;
  double j0 = 0.0;
  double mu_star = 0.0;
  ModeIndex argmin_mode;  // larger index first, e.g. (2,1)
  int j_scan_limit = 0;
  double j0_lo = 0.0;  // expected bracket for j0
  double j0_hi = 0.0;
  int expected_argmin_j = 0;
  double reference_mu_star = 0.0;
  double rel_tol = 0.0;
  double rel_error = 0.0;
  bool pass = false;
};

struct Table1Report {
  double sigma_bar = 1.0;
  std::vector<Table1Row> rows;
  bool all_pass = false;
};

// The four reference thicknesses 0.25, 0.5, 1, 2.
Table1Report table1_report();

// JSON documents ("schema": 1 first, fixed key order, shortest round-trip
// numbers, infinities as the strings "inf"/"-inf"), each ending in "\n".
std::string stationary_json(const ModelParams& params, int grid_n, double tol,
                            const StationaryState& state);
std::string mu_star_json(const SpectrumTable& table);
std::string spectrum_json(const SpectrumTable& table);
std::string table1_json(const Table1Report& report);
std::string crossover_json(double sigma_bar, double rho_bar);
std::string evolve_json(const ModelParams& params, double t_end, double epsilon,
                        const std::vector<ModeTrajectory>& trajectories,
                        const SurfaceSnapshot& surface);
std::string error_json(const std::string& type, const std::string& message);

// Header row j,n,m,k1,k2,mu_j then one line per admissible j ascending,
// LF endings, +infinity as the literal text inf.
std::string spectrum_csv(const SpectrumTable& table);

// Writes through a sibling temp file and renames over the target; throws
// io_error on any file-system failure.
void write_text_atomic(const std::string& path, const std::string& text);

}  // namespace tumorstab
