#pragma once

namespace tumorstab {

// First-order-in-delay correction to the flat stationary solution.
struct FirstOrderStationary {
  double rho0;
  double mu;
  double sigma_bar;
  double rho1;            // thickness correction per unit delay; positive
  double p1_dd_at_rho0;   // second derivative of the pressure correction at rho0

  double sigma1_at(double y) const;  // nutrient correction, y in [0, rho0]
};

// Thickness correction per unit delay:
//   mu sigma_bar (-rho0^2 - rho0 sinh rho0 cosh rho0 + 2 sinh^2 rho0)
//   / (2 (1 - tanh rho0/rho0 - tanh^2 rho0) rho0 cosh^2 rho0).
// Numerator and denominator both vanish at rho0 = 0; a Taylor form takes over
// below rho0 = 1e-2 where the direct difference loses all its digits.
double rho_star_1(double rho0, double mu, double sigma_bar);

// mu sigma_bar rho_star_1 tanh(rho0); positive.
double p1_dd_at_boundary(double rho0, double mu, double sigma_bar);

// Nutrient correction -sigma_bar rho_star_1 tanh(rho0) cosh(y)/cosh(rho0).
double sigma1_profile(double rho0, double mu, double sigma_bar, double y);

// Defect of the balance relation that defines rho_star_1:
//   rho1 (sigma_bar - sigma_tilde) + int_0^rho0 (sigma0' p0' + sigma1) dy,
// with the integral done by composite Simpson on 1e4 panels. Vanishes to
// quadrature accuracy when the closed form above is correct.
double rho1_integral_residual(double rho0, double mu, double sigma_bar);

FirstOrderStationary first_order_stationary(double rho0, double mu, double sigma_bar);

}  // namespace tumorstab
