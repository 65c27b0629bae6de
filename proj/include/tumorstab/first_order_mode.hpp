#pragma once

#include "tumorstab/spectrum.hpp"

namespace tumorstab {

// Closed-form mode profiles per unit zeroth-order amplitude. w0 is the
// linearized nutrient response, q0 the linearized pressure response:
//   -w0'' + (1+j) w0 = 0,      w0'(0) = 0, w0(rho0) = -sigma0'(rho0),
//   -q0'' + j q0 = mu w0,      q0'(0) = 0, q0(rho0) = j/2.
struct ModeProfiles {
  ModeIndex mode;
  double rho0 = 0.0;
  double mu = 0.0;
  double sigma_bar = 0.0;
  double C1 = 0.0;  // constants of the exponential general solution of q0
  double C2 = 0.0;
  double q0_d1_at_rho0 = 0.0;
  double q0_d2_at_rho0 = 0.0;

  double w0_at(double y) const;
  double q0_at(double y) const;
};

// Forcing coefficients of the first-order pressure problem, linear in the
// instantaneous amplitudes (rho0_amp, rho1_amp).
struct CCoeffs {
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
  double c5 = 0.0;
};

// Coefficients of the first-order amplitude equation
//   d rho1/dt = h1 * rho1 + k1_coeff * rho0.
// h1 reproduces the zeroth-order growth rate h exactly; computing both and
// comparing is the strongest end-to-end check of the whole assembly.
struct FirstOrderCoefficients {
  ModeIndex mode;
  double h = 0.0;
  double h1 = 0.0;
  double k1_coeff = 0.0;
};

ModeProfiles mode_profiles(const ModeIndex& mode, double rho0, double mu,
                           double sigma_bar);

CCoeffs assemble_c_coeffs(const ModeIndex& mode, double rho0, double rho1, double mu,
                          double sigma_bar, double rho0_amp, double rho1_amp);

// Boundary derivative of the first-order pressure response, assembled from
// the particular solution of the forced mode problem. rho1 is the stationary
// thickness correction per unit delay. Linear in (rho0_amp, rho1_amp); the
// j = 0 mode takes a dedicated double-integration path.
double q1_boundary_flux(const ModeIndex& mode, double rho0, double rho1, double mu,
                        double sigma_bar, double rho0_amp, double rho1_amp);

// Extracts (h1, k1_coeff) by evaluating the first-order right-hand side at
// unit amplitude vectors (0,1) and (1,0).
FirstOrderCoefficients first_order_coefficients(const ModeIndex& mode, double rho0,
                                                double mu, double sigma_bar);

}  // namespace tumorstab
