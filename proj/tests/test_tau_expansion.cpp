#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "tumorstab/tau_expansion.hpp"

using namespace tumorstab;

TEST_CASE("thickness correction matches frozen high-precision values") {
  // 50-digit evaluations of the closed form
  CHECK(rho_star_1(1.0, 1.0, 1.0) ==
        doctest::Approx(0.03149287584402001331892).epsilon(1e-13));
  CHECK(rho_star_1(0.25, 1.0, 1.0) ==
        doctest::Approx(0.00051897709378420486358).epsilon(1e-12));
  CHECK(rho_star_1(2.0, 1.0, 1.0) ==
        doctest::Approx(0.21389875794516074979).epsilon(1e-13));
  CHECK(rho_star_1(1e-3, 1.0, 1.0) ==
        doctest::Approx(3.333333143e-11).epsilon(1e-8));
}

TEST_CASE("thickness correction is exactly linear in mu and sigma_bar") {
  for (double rho0 : {0.3, 1.0, 2.5}) {
    const double base = rho_star_1(rho0, 1.0, 1.0);
    CHECK(rho_star_1(rho0, 3.0, 1.0) == doctest::Approx(3.0 * base).epsilon(1e-14));
    CHECK(rho_star_1(rho0, 1.0, 2.0) == doctest::Approx(2.0 * base).epsilon(1e-14));
  }
}

TEST_CASE("thickness correction is positive and increasing in mu") {
  const double mus[] = {0.5, 1.0, 2.0, 4.0};
  for (int i = 0; i < 10; ++i) {
    const double rho0 = 0.1 + (3.0 - 0.1) * i / 9.0;
    double prev = 0.0;
    for (double mu : mus) {
      const double r1 = rho_star_1(rho0, mu, 1.0);
      CHECK(r1 > 0.0);
      CHECK(r1 > prev);
      prev = r1;
    }
  }
}

TEST_CASE("series branch agrees with the direct form near the switch") {
  // Direct branch at rho0 = 0.02 versus the series evaluated by hand
  const double r = 0.02;
  const double ch = std::cosh(r);
  const double series = -(2.0 / 45.0) * std::pow(r, 6.0) * (1.0 + r * r / 7.0) /
                        (ch * ch);
  const double den = 2.0 * (1.0 - std::tanh(r) / r - std::tanh(r) * std::tanh(r)) * r;
  CHECK(rho_star_1(r, 1.0, 1.0) == doctest::Approx(series / den).epsilon(1e-6));

  // Continuity across the branch switch at rho0 = 1e-2
  const double below = rho_star_1(0.0099999, 1.0, 1.0);
  const double above = rho_star_1(0.0100001, 1.0, 1.0);
  CHECK(below == doctest::Approx(above).epsilon(1e-4));
}

TEST_CASE("boundary pressure correction and nutrient correction") {
  const double rho0 = 1.2, mu = 2.0, sb = 1.5;
  const double r1 = rho_star_1(rho0, mu, sb);
  CHECK(p1_dd_at_boundary(rho0, mu, sb) ==
        doctest::Approx(mu * sb * r1 * std::tanh(rho0)).epsilon(1e-14));
  CHECK(p1_dd_at_boundary(rho0, mu, sb) > 0.0);
  for (double y : {0.0, 0.5, 1.2}) {
    CHECK(sigma1_profile(rho0, mu, sb, y) < 0.0);
    CHECK(sigma1_profile(rho0, mu, sb, y) ==
          doctest::Approx(-sb * r1 * std::tanh(rho0) * std::cosh(y) /
                          std::cosh(rho0))
              .epsilon(1e-13));
  }
  // deepest depression at the interface
  CHECK(std::abs(sigma1_profile(rho0, mu, sb, rho0)) >
        std::abs(sigma1_profile(rho0, mu, sb, 0.0)));
}

TEST_CASE("defining integral balance closes to quadrature accuracy") {
  for (double rho0 : {0.25, 1.0, 2.0}) {
    for (double mu : {0.5, 1.0, 4.0}) {
      const double resid = rho1_integral_residual(rho0, mu, 1.0);
      CHECK(std::abs(resid) <= 1e-9 * mu);
    }
  }
  CHECK(std::abs(rho1_integral_residual(1.5, 2.0, 3.0)) <= 1e-9 * 2.0 * 3.0);
}

TEST_CASE("factory bundles consistent fields") {
  const FirstOrderStationary fo = first_order_stationary(1.0, 2.0, 1.0);
  CHECK(fo.rho0 == 1.0);
  CHECK(fo.mu == 2.0);
  CHECK(fo.sigma_bar == 1.0);
  CHECK(fo.rho1 == doctest::Approx(rho_star_1(1.0, 2.0, 1.0)).epsilon(1e-15));
  CHECK(fo.p1_dd_at_rho0 ==
        doctest::Approx(p1_dd_at_boundary(1.0, 2.0, 1.0)).epsilon(1e-15));
  CHECK(fo.sigma1_at(0.5) ==
        doctest::Approx(sigma1_profile(1.0, 2.0, 1.0, 0.5)).epsilon(1e-15));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(rho_star_1(-1.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(rho_star_1(1.0, 0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(rho_star_1(1.0, 1.0, -2.0), std::domain_error);
}
