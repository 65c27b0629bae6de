#include "tumorstab/first_order_mode.hpp"

#include <cmath>
#include <stdexcept>

#include "tumorstab/errors.hpp"
#include "tumorstab/hyperbolics.hpp"
#include "tumorstab/tau_expansion.hpp"

namespace tumorstab {

namespace {

void check_args(double rho0, double mu, double sigma_bar) {
  if (!(rho0 > 0.0)) throw std::domain_error("rho0 must be positive");
  if (!(mu > 0.0)) throw std::domain_error("mu must be positive");
  if (!(sigma_bar > 0.0)) throw std::domain_error("sigma_bar must be positive");
}

// Shared per-mode quantities. G is the boundary nutrient slope sigma0'(rho0);
// a and b are the fast and slow kernel frequencies.
struct ModePieces {
  double j, a, b, G, th, tha, thb;
};

ModePieces pieces(int j_int, double rho0, double sigma_bar) {
  const double j = j_int;
  const double a = std::sqrt(1.0 + j);
  const double b = std::sqrt(j);
  const double th = std::tanh(rho0);
  return {j,  a, b, sigma_bar * th, th, std::tanh(a * rho0),
          j_int > 0 ? std::tanh(b * rho0) : 0.0};
}

}  // namespace

double ModeProfiles::w0_at(double y) const {
  const double a = std::sqrt(1.0 + mode.j);
  return -sigma_bar * std::tanh(rho0) * cosh_ratio({a, y, rho0});
}

double ModeProfiles::q0_at(double y) const {
  const double j = mode.j;
  const double a = std::sqrt(1.0 + j);
  const double G = sigma_bar * std::tanh(rho0);
  double tail;  // (j - 2 mu G) cosh(sqrt(j) y) / (2 cosh(sqrt(j) rho0))
  if (mode.j == 0)
    tail = -mu * G;  // sqrt(j) kernels collapse to constants
  else
    tail = 0.5 * (j - 2.0 * mu * G) * cosh_ratio({std::sqrt(j), y, rho0});
  return mu * G * cosh_ratio({a, y, rho0}) + tail;
}

ModeProfiles mode_profiles(const ModeIndex& mode, double rho0, double mu,
                           double sigma_bar) {
  check_args(rho0, mu, sigma_bar);
  const ModePieces pc = pieces(mode.j, rho0, sigma_bar);
  ModeProfiles prof;
  prof.mode = mode;
  prof.rho0 = rho0;
  prof.mu = mu;
  prof.sigma_bar = sigma_bar;
  prof.C1 = (2.0 * mu * pc.G - pc.j) * pc.b / (2.0 * std::cosh(pc.b * rho0));
  prof.C2 = (0.5 * pc.j - mu * pc.G) / (2.0 * std::cosh(pc.b * rho0));
  prof.q0_d1_at_rho0 =
      mu * pc.G * pc.a * pc.tha + (0.5 * pc.j - mu * pc.G) * pc.b * pc.thb;
  prof.q0_d2_at_rho0 = mu * pc.G * (1.0 + pc.j) + 0.5 * (pc.j - 2.0 * mu * pc.G) * pc.j;
  return prof;
}

CCoeffs assemble_c_coeffs(const ModeIndex& mode, double rho0, double rho1, double mu,
                          double sigma_bar, double rho0_amp, double rho1_amp) {
  check_args(rho0, mu, sigma_bar);
  const ModePieces pc = pieces(mode.j, rho0, sigma_bar);
  const double sigma_tilde = sigma_bar * tanh_over_rho(rho0);
  const double ch = std::cosh(rho0);
  const double cha = std::cosh(pc.a * rho0);
  const double chb = std::cosh(pc.b * rho0);
  const double h = mu * sigma_bar * k1(pc.j, rho0) - k2(pc.j, rho0);

  CCoeffs c;
  c.c2 = -2.0 * mu * mu * sigma_bar * pc.a * pc.G / (ch * cha) * rho0_amp;
  c.c3 = -mu * sigma_bar * pc.b / ch * (pc.j - 2.0 * mu * pc.G) / (2.0 * chb) * rho0_amp;
  c.c4 = mu * mu * sigma_tilde * pc.a * pc.G / cha * rho0_amp;
  // The zeroth-order amplitude rate d rho0/dt is substituted as h * rho0_amp.
  const double w0_d1 = -pc.G * pc.a * pc.tha;
  const double sigma1_d1 = -sigma_bar * rho1 * pc.th * pc.th;
  const double brace = pc.G * h * rho0_amp - w0_d1 * rho0_amp * rho1 - pc.G * rho1_amp -
                       sigma_bar * rho1 * rho0_amp - sigma1_d1 * rho0_amp;
  c.c5 = -mu / cha * brace;
  return c;
}

namespace {

// Flux assembly with every cosh ratio cancelled analytically, so it stays
// finite for arbitrarily large sqrt(j) * rho0. Verified identical to the raw
// c-coefficient form wherever both are representable.
double flux_general(const ModeIndex& mode, double rho0, double rho1, double mu,
                    double sigma_bar, double rho0_amp, double rho1_amp) {
  if (mode.j == 0)
    throw solve_error(error_kind::singular_mode,
                      "general flux form is singular at j = 0");
  const ModePieces pc = pieces(mode.j, rho0, sigma_bar);
  const double j = pc.j;
  const double sigma_tilde = sigma_bar * tanh_over_rho(rho0);
  const double h = mu * sigma_bar * k1(j, rho0) - k2(j, rho0);

  const double w0_d1 = -pc.G * pc.a * pc.tha;
  const double sigma1_d1 = -sigma_bar * rho1 * pc.th * pc.th;
  const double brace = pc.G * h * rho0_amp - w0_d1 * rho0_amp * rho1 - pc.G * rho1_amp -
                       sigma_bar * rho1 * rho0_amp - sigma1_d1 * rho0_amp;

  const double q0_d1 = mu * pc.G * pc.a * pc.tha + (0.5 * j - mu * pc.G) * pc.b * pc.thb;
  const double c1 = -q0_d1 * rho0_amp * rho1 + 0.5 * j * rho1_amp;

  // Particular solution at the boundary.
  const double part_value =
      -mu * mu * sigma_bar * pc.a * pc.G / j * (pc.a - pc.th * pc.tha) * rho0_amp -
      mu * sigma_bar * pc.b * (j - 2.0 * mu * pc.G) / (2.0 * (4.0 * j - 1.0)) *
          (2.0 * pc.b - pc.th * pc.thb) * rho0_amp +
      mu * mu * sigma_tilde * pc.a * pc.G * (rho0 * pc.tha - 2.0 * pc.a) * rho0_amp -
      mu * brace;
  // Its derivative at the boundary.
  const double part_slope =
      -mu * mu * sigma_bar * pc.a * pc.G * pc.tha * rho0_amp -
      mu * sigma_bar * pc.b * (j - 2.0 * mu * pc.G) / (2.0 * (4.0 * j - 1.0)) *
          (pc.b * pc.th + (2.0 * j - 1.0) * pc.thb) * rho0_amp +
      mu * mu * sigma_tilde * pc.a * pc.G * (pc.a * rho0 - (1.0 + 2.0 * j) * pc.tha) *
          rho0_amp -
      mu * brace * pc.a * pc.tha;

  return (c1 - part_value) * pc.b * pc.thb + part_slope;
}

// j = 0: the homogeneous kernels degenerate to constants and the flux is the
// plain integral of the forcing over [0, rho0].
double flux_j0(double rho0, double rho1, double mu, double sigma_bar, double rho0_amp,
               double rho1_amp) {
  const CCoeffs c = assemble_c_coeffs(ModeIndex::make(0, 0), rho0, rho1, mu, sigma_bar,
                                      rho0_amp, rho1_amp);
  const double ch = std::cosh(rho0);
  const double sh = std::sinh(rho0);
  return c.c2 * (0.5 * sh * ch - 0.5 * rho0) + c.c4 * (rho0 * ch - sh) + c.c5 * sh;
}

}  // namespace

double q1_boundary_flux(const ModeIndex& mode, double rho0, double rho1, double mu,
                        double sigma_bar, double rho0_amp, double rho1_amp) {
  check_args(rho0, mu, sigma_bar);
  if (mode.j == 0) return flux_j0(rho0, rho1, mu, sigma_bar, rho0_amp, rho1_amp);
  return flux_general(mode, rho0, rho1, mu, sigma_bar, rho0_amp, rho1_amp);
}

FirstOrderCoefficients first_order_coefficients(const ModeIndex& mode, double rho0,
                                                double mu, double sigma_bar) {
  check_args(rho0, mu, sigma_bar);
  const double rho1 = rho_star_1(rho0, mu, sigma_bar);
  const double sigma_tilde = sigma_bar * tanh_over_rho(rho0);
  const double p0_dd = mu * sigma_tilde - mu * sigma_bar;
  const double p0_ddd = -mu * sigma_bar * std::tanh(rho0);
  const double p1_dd = p1_dd_at_boundary(rho0, mu, sigma_bar);
  const double q0_dd = mode_profiles(mode, rho0, mu, sigma_bar).q0_d2_at_rho0;

  FirstOrderCoefficients out;
  out.mode = mode;
  out.h = growth_rate_h(mode, mu, rho0, sigma_bar);
  out.h1 =
      -p0_dd - q1_boundary_flux(mode, rho0, rho1, mu, sigma_bar, 0.0, 1.0);
  out.k1_coeff = -p0_ddd * rho1 - p1_dd - q0_dd * rho1 -
                 q1_boundary_flux(mode, rho0, rho1, mu, sigma_bar, 1.0, 0.0);
  return out;
}

}  // namespace tumorstab
