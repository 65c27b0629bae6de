#include "tumorstab/spectrum.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tumorstab/errors.hpp"
#include "tumorstab/hyperbolics.hpp"

namespace tumorstab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_jrho(double j, double rho0) {
  if (!(rho0 > 0.0)) throw std::domain_error("rho0 must be positive");
  if (!(j >= 0.0)) throw std::domain_error("mode parameter j must be nonnegative");
}

}  // namespace

ModeIndex ModeIndex::make(int n, int m) {
  if (n < 0 || m < 0) throw std::domain_error("mode numbers must be nonnegative");
  return {n, m, n * n + m * m};
}

double k1(double j, double rho0) {
  check_jrho(j, rho0);
  const double a = std::sqrt(1.0 + j);
  double step = a * std::tanh(a * rho0);
  if (j > 0.0) {
    const double b = std::sqrt(j);
    step -= b * std::tanh(b * rho0);
  }
  return 1.0 - tanh_over_rho(rho0) - std::tanh(rho0) * step;
}

double k2(double j, double rho0) {
  check_jrho(j, rho0);
  if (j == 0.0) return 0.0;
  const double b = std::sqrt(j);
  return 0.5 * j * b * std::tanh(b * rho0);
}

double growth_rate_h(const ModeIndex& mode, double mu, double rho0,
                     double sigma_bar) {
  if (!(mu > 0.0)) throw std::domain_error("mu must be positive");
  if (!(sigma_bar > 0.0)) throw std::domain_error("sigma_bar must be positive");
  const double j = mode.j;
  return mu * sigma_bar * k1(j, rho0) - k2(j, rho0);
}

double find_j0(double rho0) {
  if (!(rho0 > 0.0)) throw std::domain_error("rho0 must be positive");
  // k1 is strictly increasing in j with k1(0) < 0 < sup k1, so doubling the
  // right endpoint must produce a sign change.
  double lo = 0.0, hi = 1.0;
  while (k1(hi, rho0) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e15)
      throw solve_error(error_kind::bracket_sign, "no sign change found for k1");
  }
  double x = 0.5 * (lo + hi), fx = k1(x, rho0);
  double x_prev = lo, f_prev = k1(lo, rho0);
  for (int it = 0; it < 200; ++it) {
    if (std::fabs(fx) <= 1e-12) return x;
    if (fx < 0.0)
      lo = x;
    else
      hi = x;
    double cand = 0.5 * (lo + hi);
    const double denom = fx - f_prev;
    if (denom != 0.0) {
      const double secant = x - fx * (x - x_prev) / denom;
      if (secant > lo && secant < hi) cand = secant;
    }
    x_prev = x;
    f_prev = fx;
    x = cand;
    fx = k1(x, rho0);
  }
  return x;
}

double mu_threshold(int j, double rho0, double sigma_bar) {
  if (j < 0) throw std::domain_error("mode parameter j must be nonnegative");
  if (!(sigma_bar > 0.0)) throw std::domain_error("sigma_bar must be positive");
  if (static_cast<double>(j) <= find_j0(rho0)) return kInf;
  return k2(j, rho0) / (sigma_bar * k1(j, rho0));
}

std::optional<ModeIndex> admissible_witness(int j) {
  if (j < 0) throw std::domain_error("mode parameter j must be nonnegative");
  for (int n = 0; 2 * n * n <= j; ++n) {
    const int m2 = j - n * n;
    const int m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m2))));
    if (m * m == m2) return ModeIndex::make(n, m);
  }
  return std::nullopt;
}

bool is_admissible(int j) { return admissible_witness(j).has_value(); }

SpectrumTable mu_star(double rho0, double sigma_bar, int j_scan_override) {
  if (!(rho0 > 0.0)) throw std::domain_error("rho0 must be positive");
  if (!(sigma_bar > 0.0)) throw std::domain_error("sigma_bar must be positive");

  SpectrumTable table;
  table.rho0 = rho0;
  table.sigma_bar = sigma_bar;
  table.j0 = find_j0(rho0);
  const double k1_sup = 1.0 - tanh_over_rho(rho0);

  double best = kInf;
  int best_j = -1;
  ModeIndex best_witness;
  for (int j = 0;; ++j) {
    if (j_scan_override > 0) {
      if (j > j_scan_override) break;
    } else if (best_j >= 0 && k2(j, rho0) / (sigma_bar * k1_sup) > best) {
      table.j_scan_limit = j;
      break;
    }
    SpectrumEntry e;
    e.j = j;
    e.k1 = k1(j, rho0);
    e.k2 = k2(j, rho0);
    e.mu_j = static_cast<double>(j) <= table.j0
                 ? kInf
                 : e.k2 / (sigma_bar * e.k1);
    const auto witness = admissible_witness(j);
    e.admissible = witness.has_value();
    e.n = e.admissible ? witness->n : -1;
    e.m = e.admissible ? witness->m : -1;
    table.entries.push_back(e);

    if (e.admissible && std::isfinite(e.mu_j)) {
      if (best_j >= 0 && std::fabs(e.mu_j - best) <= 1e-12 * best)
        table.argmin_tie = true;  // keep the smaller j
      else if (e.mu_j < best) {
        best = e.mu_j;
        best_j = j;
        best_witness = *witness;
      }
    }
  }
  if (best_j < 0)
    throw solve_error(error_kind::no_convergence, "no admissible mode found in scan");
  if (j_scan_override > 0) table.j_scan_limit = j_scan_override;

  table.mu_star = best;
  // Present the witness largest-first, e.g. (2,1) rather than (1,2).
  table.argmin_mode =
      ModeIndex::make(std::max(best_witness.n, best_witness.m),
                      std::min(best_witness.n, best_witness.m));
  return table;
}

double crossover_rho_bar(double sigma_bar) {
  if (!(sigma_bar > 0.0)) throw std::domain_error("sigma_bar must be positive");
  const auto argmin_is_one = [&](double rho0) {
    return mu_star(rho0, sigma_bar).argmin_mode.j == 1;
  };
  double lo = 1.0, hi = 2.0;  // straddles the switch: argmin 5 at 1, argmin 1 at 2
  if (argmin_is_one(lo) || !argmin_is_one(hi))
    throw solve_error(error_kind::bracket_sign,
                      "threshold argmin does not switch on [1,2]");
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (argmin_is_one(mid) ? hi : lo) = mid;
  }
  return std::round(0.5 * (lo + hi) * 1e4) / 1e4;
}

}  // namespace tumorstab
