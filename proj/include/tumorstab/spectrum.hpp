#pragma once

#include <optional>
#include <vector>

namespace tumorstab {

// Surface perturbation mode cos/sin(n x1) * cos/sin(m x2). Every spectral
// quantity depends on the pair only through j = n^2 + m^2.
struct ModeIndex {
  int n = 0;
  int m = 0;
  int j = 0;

  static ModeIndex make(int n, int m);  // validates and caches j
};

struct SpectrumEntry {
  int j = 0;
  int n = 0;  // witness pair when admissible, otherwise -1
  int m = 0;
  bool admissible = false;
  double k1 = 0.0;
  double k2 = 0.0;
  double mu_j = 0.0;  // +infinity when j <= j0
};

struct SpectrumTable {
  double rho0 = 0.0;
  double sigma_bar = 0.0;
  double j0 = 0.0;
  double mu_star = 0.0;
  ModeIndex argmin_mode;
  int j_scan_limit = 0;   // first j whose certified lower bound beat mu_star
  bool argmin_tie = false;
  std::vector<SpectrumEntry> entries;  // every integer j up to the scan limit
};

// Stabilizing and destabilizing parts of the growth rate, as functions of a
// real mode parameter j >= 0:
//   k1 = 1 - tanh(rho0)/rho0
//        - tanh(rho0) (sqrt(1+j) tanh(sqrt(1+j) rho0) - sqrt(j) tanh(sqrt(j) rho0))
//   k2 = j^{3/2} tanh(sqrt(j) rho0) / 2.
double k1(double j, double rho0);
double k2(double j, double rho0);

// Growth rate h = mu sigma_bar k1(j) - k2(j) of the (n,m) surface mode.
double growth_rate_h(const ModeIndex& mode, double mu, double rho0,
                     double sigma_bar);

// Unique real root of k1(., rho0): modes with j <= j0 decay for every mu.
double find_j0(double rho0);

// Per-mode instability threshold k2/(sigma_bar k1), +infinity for j <= j0.
double mu_threshold(int j, double rho0, double sigma_bar);

// Whether j is a sum of two integer squares; the witness returned is the
// lexicographically smallest pair with n <= m.
bool is_admissible(int j);
std::optional<ModeIndex> admissible_witness(int j);

// Minimum threshold over admissible integers j > j0. The scan stops once the
// bound k2(j)/(sigma_bar sup k1) exceeds the running minimum, which is sound
// because k1 < sup k1 = 1 - tanh(rho0)/rho0; the bound index is recorded in
// the table. A positive j_scan_override scans exactly up to that j instead.
SpectrumTable mu_star(double rho0, double sigma_bar, int j_scan_override = 0);

// Smallest rho0 (4 decimals) above which the threshold minimum sits at j = 1.
double crossover_rho_bar(double sigma_bar);

}  // namespace tumorstab
