#include "tumorstab/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tumorstab/errors.hpp"
#include "tumorstab/first_order_mode.hpp"
#include "tumorstab/tau_expansion.hpp"

namespace tumorstab {

namespace {

std::string classify(double h, double mu, double sigma_bar, double j, double rho0) {
  double scale = mu * sigma_bar * std::abs(k1(j, rho0)) + std::abs(k2(j, rho0));
  if (scale == 0.0) scale = 1.0;
  if (std::abs(h) <= 1e-12 * scale) return "neutral";
  return h > 0.0 ? "unstable" : "stable";
}

// One RK4 step of d/dt (a, b) = (h a, h b + k a) with step dt.
void rk4_step(double h, double k, double dt, double& a, double& b) {
  auto fa = [h](double av) { return h * av; };
  auto fb = [h, k](double av, double bv) { return h * bv + k * av; };
  const double a1 = fa(a), b1 = fb(a, b);
  const double a2 = fa(a + 0.5 * dt * a1), b2 = fb(a + 0.5 * dt * a1, b + 0.5 * dt * b1);
  const double a3 = fa(a + 0.5 * dt * a2), b3 = fb(a + 0.5 * dt * a2, b + 0.5 * dt * b2);
  const double a4 = fa(a + dt * a3), b4 = fb(a + dt * a3, b + dt * b3);
  a += dt / 6.0 * (a1 + 2.0 * a2 + 2.0 * a3 + a4);
  b += dt / 6.0 * (b1 + 2.0 * b2 + 2.0 * b3 + b4);
}

}  // namespace

ModeTrajectory evolve_mode(const ModeIndex& mode, const ModelParams& params,
                           double rho0_0, double rho1_0,
                           const std::vector<double>& t_grid, bool self_check) {
  params.validate();
  if (t_grid.empty() || t_grid.front() != 0.0)
    throw std::invalid_argument("time grid must start at 0");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i] > t_grid[i - 1]))
      throw std::invalid_argument("time grid must be strictly increasing");

  const double rho0 = solve_rho_s(params);
  const FirstOrderCoefficients fc =
      first_order_coefficients(mode, rho0, params.mu, params.sigma_bar);

  ModeTrajectory traj;
  traj.mode = mode;
  traj.h = fc.h;
  traj.k1_coeff = fc.k1_coeff;
  traj.rho0_0 = rho0_0;
  traj.rho1_0 = rho1_0;
  traj.times = t_grid;
  traj.rho0_t.reserve(t_grid.size());
  traj.rho1_t.reserve(t_grid.size());
  for (double t : t_grid) {
    const double e = std::exp(fc.h * t);
    traj.rho0_t.push_back(e * rho0_0);
    traj.rho1_t.push_back(e * (rho1_0 + fc.k1_coeff * rho0_0 * t));
  }
  traj.classification = classify(fc.h, params.mu, params.sigma_bar, mode.j, rho0);

  if (self_check && t_grid.back() > 0.0) {
    const double t_end = t_grid.back();
    const double c0 = traj.rho0_t.back();
    const double c1 = traj.rho1_t.back();
    if (std::isfinite(c0) && std::isfinite(c1)) {
      long steps = static_cast<long>(std::ceil(std::abs(fc.h) * t_end / 0.005));
      steps = std::clamp(steps, 1024L, 1L << 20);
      const double dt = t_end / static_cast<double>(steps);
      double a = rho0_0, b = rho1_0;
      for (long s = 0; s < steps; ++s) rk4_step(fc.h, fc.k1_coeff, dt, a, b);
      const double err = std::abs(a - c0) + std::abs(b - c1);
      const double tol = 1e-8 * (std::abs(c0) + std::abs(c1)) + 1e-280;
      if (err > tol)
        throw solve_error(error_kind::consistency,
                          "trajectory self-check failed at t = " +
                              std::to_string(t_end));
    }
  }
  return traj;
}

DecayCertificate decay_certificate(const ModelParams& params, int j_max) {
  params.validate();
  if (j_max < 1) throw std::invalid_argument("j_max must be at least 1");
  const double rho0 = solve_rho_s(params);
  const SpectrumTable table = mu_star(rho0, params.sigma_bar);
  if (!(params.mu < table.mu_star))
    throw std::invalid_argument("decay certificate requires mu below mu_star");

  DecayCertificate cert;
  cert.mu_star_value = table.mu_star;
  cert.delta = std::numeric_limits<double>::infinity();
  for (int j = 0; j <= j_max; ++j) {
    const auto witness = admissible_witness(j);
    if (!witness) continue;
    ++cert.modes_checked;
    const double h = growth_rate_h(*witness, params.mu, rho0, params.sigma_bar);
    const double rate = -h / std::pow(1.0 + j, 1.5);
    if (rate < cert.delta) {
      cert.delta = rate;
      cert.argmin_mode = *witness;
    }
  }
  if (!(cert.delta > 0.0))
    throw solve_error(error_kind::consistency,
                      "nonpositive decay rate below threshold");
  cert.delta_prime = 0.5 * cert.delta;

  // Envelope fit for the slowest mode with unit initial data (1, 0).
  const FirstOrderCoefficients fc = first_order_coefficients(
      cert.argmin_mode, rho0, params.mu, params.sigma_bar);
  const double horizon = 20.0 / cert.delta;
  const int samples = 512;
  double sup = 0.0;
  int arg = 0;
  for (int i = 0; i <= samples; ++i) {
    const double t = horizon * i / samples;
    const double amp =
        std::exp(fc.h * t) * (1.0 + params.tau * fc.k1_coeff * t);
    const double v = std::abs(amp) * std::exp(cert.delta_prime * t);
    if (v > sup) {
      sup = v;
      arg = i;
    }
  }
  cert.envelope_constant = sup;
  cert.envelope_ok = arg < samples;
  return cert;
}

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int auto_grid(int max_nm) {
  int need = std::max(8, 4 * max_nm);
  int g = 8;
  while (g < need) g *= 2;
  return g;
}

double trig1(Parity p, double x) {
  return (p == Parity::cos_cos || p == Parity::cos_sin) ? std::cos(x) : std::sin(x);
}

double trig2(Parity p, double x) {
  return (p == Parity::cos_cos || p == Parity::sin_cos) ? std::cos(x) : std::sin(x);
}

}  // namespace

SurfaceSnapshot synthesize_surface(const std::vector<InitialMode>& initial,
                                   const ModelParams& params, double epsilon,
                                   double t, int grid_size) {
  params.validate();
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (!(t >= 0.0)) throw std::invalid_argument("time must be nonnegative");

  int max_nm = 1;  // empty mode list still gets a small flat grid
  for (const auto& im : initial) max_nm = std::max({max_nm, im.mode.n, im.mode.m});
  if (grid_size == 0) {
    grid_size = auto_grid(max_nm);
  } else if (!power_of_two(grid_size) || grid_size < 4 * max_nm) {
    throw std::invalid_argument(
        "grid_size must be a power of two of at least 4 max(n, m)");
  }

  const double rho0 = solve_rho_s(params);

  SurfaceSnapshot snap;
  snap.epsilon = epsilon;
  snap.tau = params.tau;
  snap.rho_star =
      rho0 + params.tau * rho_star_1(rho0, params.mu, params.sigma_bar);
  snap.grid_size = grid_size;

  const std::vector<double> t_grid =
      t > 0.0 ? std::vector<double>{0.0, t} : std::vector<double>{0.0};
  for (const auto& im : initial) {
    const ModeTrajectory traj = evolve_mode(im.mode, params, im.rho0_0, im.rho1_0,
                                            t_grid, /*self_check=*/false);
    ModeAmplitude ma;
    ma.mode = im.mode;
    ma.parity = im.parity;
    ma.amplitude = traj.rho0_t.back() + params.tau * traj.rho1_t.back();
    snap.modes.push_back(ma);
  }

  const int N = grid_size;
  const double step = 2.0 * std::acos(-1.0) / N;
  snap.heights.assign(static_cast<std::size_t>(N) * N, snap.rho_star);
  for (const auto& ma : snap.modes) {
    for (int i = 0; i < N; ++i) {
      const double f1 = trig1(ma.parity, ma.mode.n * (i * step));
      for (int k = 0; k < N; ++k) {
        const double f2 = trig2(ma.parity, ma.mode.m * (k * step));
        snap.heights[static_cast<std::size_t>(i) * N + k] +=
            epsilon * ma.amplitude * f1 * f2;
      }
    }
  }
  const double min_h = *std::min_element(snap.heights.begin(), snap.heights.end());
  if (!(min_h > 0.0))
    throw std::invalid_argument(
        "perturbation too large: surface height is not positive");
  return snap;
}

}  // namespace tumorstab
