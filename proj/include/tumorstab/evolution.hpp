#pragma once

#include <string>
#include <vector>

#include "tumorstab/spectrum.hpp"
#include "tumorstab/stationary.hpp"

namespace tumorstab {

// Which trig factor each lateral direction carries.
enum class Parity { cos_cos, cos_sin, sin_cos, sin_sin };

// Linearized evolution of one surface mode: rho0_t follows d/dt a = h a, the
// delay correction rho1_t follows d/dt b = h b + k1_coeff a. Closed forms
//   a(t) = e^{h t} a(0),   b(t) = e^{h t} (b(0) + k1_coeff a(0) t).
struct ModeTrajectory {
  ModeIndex mode;
  double h = 0.0;
  double k1_coeff = 0.0;
  double rho0_0 = 0.0;
  double rho1_0 = 0.0;
  std::vector<double> times;
  std::vector<double> rho0_t;
  std::vector<double> rho1_t;
  std::string classification;  // "stable", "neutral", or "unstable"
};

// Evolves one mode on an ascending time grid starting at 0. With self_check
// on, a fourth-order integration of the coupled pair is compared against the
// closed form at the final time; disagreement beyond 1e-8 relative throws.
ModeTrajectory evolve_mode(const ModeIndex& mode, const ModelParams& params,
                           double rho0_0, double rho1_0,
                           const std::vector<double>& t_grid,
                           bool self_check = true);

// Uniform decay certificate below the instability threshold: every admissible
// mode with j <= j_max satisfies h <= -delta (1+j)^{3/2}, and the slowest
// mode's combined amplitude |a + tau b| stays under C e^{-delta/2 t}.
struct DecayCertificate {
  double delta = 0.0;        // uniform rate, positive
  ModeIndex argmin_mode;     // admissible j minimizing -h/(1+j)^{3/2}
  double mu_star_value = 0.0;
  double delta_prime = 0.0;  // delta / 2
  double envelope_constant = 0.0;  // fitted sup of |a + tau b| e^{delta' t}
  bool envelope_ok = false;  // sup attained strictly inside the fit horizon
  int modes_checked = 0;
};

// Requires mu < mu_star(rho0); throws std::invalid_argument otherwise.
DecayCertificate decay_certificate(const ModelParams& params, int j_max);

struct InitialMode {
  ModeIndex mode;
  Parity parity = Parity::cos_cos;
  double rho0_0 = 0.0;
  double rho1_0 = 0.0;
};

struct ModeAmplitude {
  ModeIndex mode;
  Parity parity = Parity::cos_cos;
  double amplitude = 0.0;  // combined a(t) + tau b(t)
};

// Perturbed free boundary sampled on an N x N grid over [0, 2pi)^2:
//   height(x1, x2) = rho_star + epsilon sum_modes amplitude trig(n x1) trig(m x2),
// row-major, heights[i * N + k] at x1 = 2 pi i / N, x2 = 2 pi k / N.
struct SurfaceSnapshot {
  double epsilon = 0.0;
  double tau = 0.0;
  double rho_star = 0.0;  // rho_s + tau rho_star_1
  int grid_size = 0;
  std::vector<ModeAmplitude> modes;
  std::vector<double> heights;
};

// grid_size 0 picks the smallest power of two >= max(8, 4 max(n, m)); an
// explicit grid_size must itself be such a power of two. The sampled surface
// must stay strictly positive.
SurfaceSnapshot synthesize_surface(const std::vector<InitialMode>& initial,
                                   const ModelParams& params, double epsilon,
                                   double t, int grid_size = 0);

}  // namespace tumorstab
