#include "tumorstab/tau_expansion.hpp"

#include <cmath>
#include <stdexcept>

#include "tumorstab/hyperbolics.hpp"
#include "tumorstab/quadrature.hpp"
#include "tumorstab/stationary.hpp"

namespace tumorstab {

namespace {

void check_args(double rho0, double mu, double sigma_bar) {
  if (!(rho0 > 0.0)) throw std::domain_error("rho0 must be positive");
  if (!(mu > 0.0)) throw std::domain_error("mu must be positive");
  if (!(sigma_bar > 0.0)) throw std::domain_error("sigma_bar must be positive");
}

}  // namespace

double rho_star_1(double rho0, double mu, double sigma_bar) {
  check_args(rho0, mu, sigma_bar);
  const double th = std::tanh(rho0);
  // Written with cosh^2 divided out term by term, the quotient never
  // overflows: num -> -rho0 + 2 and den -> -2 as rho0 grows.
  double num;  // (-rho0^2 - rho0 sinh cosh + 2 sinh^2) / cosh^2
  if (rho0 < 1e-2) {
    // The three terms cancel through 4th order; the series starts at rho0^6:
    //   f(rho0) = -(2/45) rho0^6 (1 + rho0^2/7) + O(rho0^10).
    const double r2 = rho0 * rho0;
    const double ch = std::cosh(rho0);
    num = -(2.0 / 45.0) * r2 * r2 * r2 * (1.0 + r2 / 7.0) / (ch * ch);
  } else {
    const double ch = std::cosh(rho0);
    num = -rho0 * rho0 / (ch * ch) - rho0 * th + 2.0 * th * th;
  }
  const double den = 2.0 * (1.0 - tanh_over_rho(rho0) - th * th) * rho0;
  return mu * sigma_bar * num / den;
}

double p1_dd_at_boundary(double rho0, double mu, double sigma_bar) {
  return mu * sigma_bar * rho_star_1(rho0, mu, sigma_bar) * std::tanh(rho0);
}

double sigma1_profile(double rho0, double mu, double sigma_bar, double y) {
  if (y < 0.0 || y > rho0)
    throw std::domain_error("profile evaluation outside [0, rho0]");
  return -sigma_bar * rho_star_1(rho0, mu, sigma_bar) * std::tanh(rho0) *
         cosh_ratio({1.0, y, rho0});
}

double rho1_integral_residual(double rho0, double mu, double sigma_bar) {
  check_args(rho0, mu, sigma_bar);
  const double sigma_tilde = sigma_bar * tanh_over_rho(rho0);
  const double rho1 = rho_star_1(rho0, mu, sigma_bar);
  const auto integrand = [&](double y) {
    return sigma0_profile_d1(rho0, sigma_bar, y) *
               p0_profile_d1(rho0, mu, sigma_bar, sigma_tilde, y) +
           sigma1_profile(rho0, mu, sigma_bar, y);
  };
  return rho1 * (sigma_bar - sigma_tilde) +
         simpson_integral(integrand, 0.0, rho0, 10000);
}

double FirstOrderStationary::sigma1_at(double y) const {
  return sigma1_profile(rho0, mu, sigma_bar, y);
}

FirstOrderStationary first_order_stationary(double rho0, double mu, double sigma_bar) {
  check_args(rho0, mu, sigma_bar);
  return {rho0, mu, sigma_bar, rho_star_1(rho0, mu, sigma_bar),
          p1_dd_at_boundary(rho0, mu, sigma_bar)};
}

}  // namespace tumorstab
