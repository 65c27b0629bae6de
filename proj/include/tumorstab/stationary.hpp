#pragma once

#include <vector>

#include "tumorstab/grid_function.hpp"

namespace tumorstab {

// Physical constants: external nutrient level sigma_bar, proliferation
// threshold sigma_tilde, aggressiveness mu, replication delay tau.
struct ModelParams {
  double sigma_bar = 1.0;
  double sigma_tilde = 0.5;
  double mu = 1.0;
  double tau = 0.0;

  void validate() const;  // throws std::invalid_argument
};

// Converged flat stationary solution. The pressure lives in rescaled
// coordinates yh = y/rho on [0,2] (value rho * p(rho * yh)); characteristics
// holds one backward path per quadrature node of [0,1], each sampled on
// [-tau, 0], and is empty when tau = 0.
struct StationaryState {
  double rho_star = 0.0;
  double rho_s = 0.0;  // zero-delay thickness
  GridFunction pressure;
  std::vector<GridFunction> characteristics;
  int iterations = 0;        // total inner fixed-point iterations
  int outer_iterations = 0;  // root-find steps on rho
  double residual = 0.0;     // nutrient-balance integral at rho_star
  double contraction_factor = 0.0;  // largest measured ratio of successive changes
};

// Thickness of the zero-delay stationary layer: the unique root of
// sigma_bar * tanh(rho)/rho = sigma_tilde, to 1e-12 * sigma_bar.
double solve_rho_s(const ModelParams& params);

// Zero-delay nutrient profile sigma_bar * cosh(y)/cosh(rho0) and derivatives,
// y in [0, rho0].
double sigma0_profile(double rho0, double sigma_bar, double y);
double sigma0_profile_d1(double rho0, double sigma_bar, double y);
double sigma0_profile_d2(double rho0, double sigma_bar, double y);

// Zero-delay pressure profile and derivatives, y in [0, rho0]. Requires
// sigma_tilde = sigma_bar * tanh(rho0)/rho0 to 1e-10 relative.
double p0_profile(double rho0, double mu, double sigma_bar, double sigma_tilde,
                  double y);
double p0_profile_d1(double rho0, double mu, double sigma_bar, double sigma_tilde,
                     double y);
double p0_profile_d2(double rho0, double mu, double sigma_bar, double sigma_tilde,
                     double y);
double p0_profile_d3(double rho0, double mu, double sigma_bar, double sigma_tilde,
                     double y);

// One application of the delayed pressure map on [0,2]: on [0,1] the double
// integral of mu rho^3 (sigma(traced height) - sigma_tilde), linearly extended
// on (1,2]. The result satisfies value(1) = 0 and d1(0) = 0 exactly.
// grid_n must be a multiple of 4 and at least 64.
GridFunction apply_fixed_point_map(const GridFunction& p, double rho,
                                   const ModelParams& params, int grid_n);

// Height at time -tau of the cell that sits at height y (rescaled, in [0,1])
// at time 0, flowing backward along d xi/ds = -rho^-3 p'(xi). Classical RK4
// with 16 steps; throws if the path leaves [0,2].
double characteristic_origin(const GridFunction& p, double rho, double tau, double y);

// The full backward path as a function of s on [-tau, 0] (17 samples).
GridFunction characteristic_path(const GridFunction& p, double rho, double tau,
                                 double y);

// Nutrient-balance residual at thickness rho: the integral over [0,1] of
// (sigma(traced height) - sigma_tilde), evaluated on the converged pressure.
// Positive for rho below the stationary thickness, negative above.
double stationary_residual(const ModelParams& params, double rho, int grid_n,
                           double tol);

// Full solve: outer bisection+secant on rho over [rho_s/2, 3 rho_s/2], inner
// warm-started fixed-point iteration on the pressure. The contraction factor
// is measured, never assumed; an iteration that stops contracting throws.
StationaryState solve_stationary(const ModelParams& params, int grid_n = 512,
                                 double tol = 1e-10);

}  // namespace tumorstab
