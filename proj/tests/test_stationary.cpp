#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "tumorstab/errors.hpp"
#include "tumorstab/grid_function.hpp"
#include "tumorstab/stationary.hpp"
#include "tumorstab/tau_expansion.hpp"

using namespace tumorstab;

namespace {

ModelParams params_for_rho(double rho0, double mu = 1.0, double tau = 0.0,
                           double sigma_bar = 1.0) {
  ModelParams p;
  p.sigma_bar = sigma_bar;
  p.sigma_tilde = sigma_bar * std::tanh(rho0) / rho0;
  p.mu = mu;
  p.tau = tau;
  return p;
}

// Exact rescaled stationary pressure rho * p0(rho * yh) on [0, 2]; the slope
// at the interface vanishes, so the linear extension is identically zero.
GridFunction exact_rescaled_pressure(const ModelParams& p, double rho, int grid_n) {
  std::vector<double> v(grid_n + 1), d(grid_n + 1);
  for (int i = 0; i <= grid_n; ++i) {
    const double yh = 2.0 * i / grid_n;
    if (yh <= 1.0) {
      v[i] = rho * p0_profile(rho, p.mu, p.sigma_bar, p.sigma_tilde, rho * yh);
      d[i] = rho * rho *
             p0_profile_d1(rho, p.mu, p.sigma_bar, p.sigma_tilde, rho * yh);
    } else {
      v[i] = 0.0;
      d[i] = 0.0;
    }
  }
  return GridFunction(0.0, 2.0, v, d);
}

}  // namespace

TEST_CASE("solve_rho_s inverts tanh(rho)/rho") {
  CHECK(solve_rho_s(params_for_rho(1.0)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(solve_rho_s(params_for_rho(1.0, 1.0, 0.0, 2.0)) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(solve_rho_s(params_for_rho(0.25)) == doctest::Approx(0.25).epsilon(1e-10));
  // tanh(rho)/rho = 1/2, 50-digit evaluation
  ModelParams p;
  p.sigma_bar = 1.0;
  p.sigma_tilde = 0.5;
  CHECK(solve_rho_s(p) ==
        doctest::Approx(1.915008048154537481353).epsilon(1e-12));
}

TEST_CASE("nutrient profile values and derivatives") {
  // cosh(0.5)/cosh(1), 50-digit evaluation
  CHECK(sigma0_profile(1.0, 1.0, 0.5) ==
        doctest::Approx(0.73076282584635880921).epsilon(1e-14));
  CHECK(sigma0_profile(1.0, 3.0, 1.0) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(sigma0_profile_d1(1.5, 2.0, 0.0) == 0.0);
  for (double y : {0.0, 0.3, 0.9, 1.5}) {
    CHECK(sigma0_profile_d2(1.5, 2.0, y) ==
          doctest::Approx(sigma0_profile(1.5, 2.0, y)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(sigma0_profile(1.0, 1.0, -0.1), std::domain_error);
  CHECK_THROWS_AS(sigma0_profile(1.0, 1.0, 1.1), std::domain_error);
}

TEST_CASE("zero-delay pressure satisfies its boundary value problem") {
  const double rho0 = 1.3, mu = 2.0, sb = 1.5;
  const double st = sb * std::tanh(rho0) / rho0;
  CHECK(p0_profile(rho0, mu, sb, st, rho0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(p0_profile_d1(rho0, mu, sb, st, 0.0) == 0.0);
  CHECK(p0_profile_d1(rho0, mu, sb, st, rho0) ==
        doctest::Approx(0.0).epsilon(1e-14));
  for (double y : {0.0, 0.4, 0.9, 1.3}) {
    // -p'' = mu (sigma - sigma_tilde)
    CHECK(p0_profile_d2(rho0, mu, sb, st, y) ==
          doctest::Approx(mu * st - mu * sigma0_profile(rho0, sb, y))
              .epsilon(1e-13));
    CHECK(p0_profile_d3(rho0, mu, sb, st, y) ==
          doctest::Approx(-mu * sigma0_profile_d1(rho0, sb, y)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(p0_profile(1.0, 1.0, 1.0, 0.3, 0.5), std::invalid_argument);
}

TEST_CASE("fixed-point map reproduces the exact zero-delay pressure") {
  const ModelParams p = params_for_rho(1.0);
  const int n = 512;
  const GridFunction exact = exact_rescaled_pressure(p, 1.0, n);
  const GridFunction mapped = apply_fixed_point_map(exact, 1.0, p, n);

  CHECK(mapped(1.0) == 0.0);
  CHECK(mapped.deriv()[0] == 0.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < mapped.nodes(); ++i)
    worst = std::max(worst, std::abs(mapped.values()[i] - exact.values()[i]));
  CHECK(worst < 5e-11);
}

TEST_CASE("fixed-point map validates its grid") {
  const ModelParams p = params_for_rho(1.0);
  const GridFunction ok = GridFunction::zero(0.0, 2.0, 65);
  CHECK_THROWS_WITH_AS(apply_fixed_point_map(ok, 1.0, p, 32),
                       doctest::Contains("resolution"), std::invalid_argument);
  CHECK_THROWS_AS(apply_fixed_point_map(ok, 1.0, p, 66), std::invalid_argument);
  CHECK_THROWS_AS(
      apply_fixed_point_map(GridFunction::zero(0.0, 1.0, 65), 1.0, p, 64),
      std::invalid_argument);
  CHECK_THROWS_AS(apply_fixed_point_map(ok, -1.0, p, 64), std::invalid_argument);
  CHECK_NOTHROW(apply_fixed_point_map(ok, 1.0, p, 64));
}

TEST_CASE("backward characteristics: identity at zero delay, exact for constant drift") {
  const ModelParams p = params_for_rho(1.0);
  const GridFunction zero = GridFunction::zero(0.0, 2.0, 129);
  for (double y : {0.0, 0.31, 0.9, 1.0})
    CHECK(characteristic_origin(zero, 1.0, 0.0, y) == y);

  // Linear pressure -K yh gives the constant velocity K / rho^3.
  const double K = 0.2, rho = 1.1, tau = 0.5;
  std::vector<double> v(129), d(129, -K);
  for (int i = 0; i < 129; ++i) v[i] = -K * (2.0 * i / 128.0);
  const GridFunction lin(0.0, 2.0, v, d);
  const double vel = K / (rho * rho * rho);
  for (double y : {0.2, 0.6, 1.0}) {
    CHECK(characteristic_origin(lin, rho, tau, y) ==
          doctest::Approx(y - vel * tau).epsilon(1e-14));
  }
}

TEST_CASE("characteristic escape is diagnosed") {
  std::vector<double> v(129), d(129, -20.0);
  for (int i = 0; i < 129; ++i) v[i] = -20.0 * (2.0 * i / 128.0);
  const GridFunction steep(0.0, 2.0, v, d);
  const ModelParams p = params_for_rho(1.0);
  (void)p;
  try {
    characteristic_origin(steep, 1.0, 1.0, 0.1);
    FAIL("expected a characteristic escape");
  } catch (const solve_error& e) {
    CHECK(e.kind() == error_kind::characteristic_escape);
  }
}

TEST_CASE("characteristic path endpoints") {
  std::vector<double> v(129), d(129, -0.2);
  for (int i = 0; i < 129; ++i) v[i] = -0.2 * (2.0 * i / 128.0);
  const GridFunction lin(0.0, 2.0, v, d);
  const GridFunction path = characteristic_path(lin, 1.0, 0.7, 0.5);
  CHECK(path.lo() == -0.7);
  CHECK(path.hi() == 0.0);
  CHECK(path.nodes() == 17);
  CHECK(path(0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(path(-0.7) ==
        doctest::Approx(characteristic_origin(lin, 1.0, 0.7, 0.5)).epsilon(1e-14));
}

TEST_CASE("nutrient balance residual brackets the stationary thickness") {
  const ModelParams p = params_for_rho(1.0, 1.0, 0.01);
  CHECK(stationary_residual(p, 0.9, 256, 1e-10) > 0.0);
  CHECK(stationary_residual(p, 1.1, 256, 1e-10) < 0.0);
}

TEST_CASE("zero-delay solve recovers the closed form") {
  const ModelParams p = params_for_rho(1.0);
  const StationaryState st = solve_stationary(p, 512, 1e-10);
  // both root finds stop on residual tolerances, so allow their slack
  CHECK(st.rho_star == doctest::Approx(st.rho_s).epsilon(1e-9));
  CHECK(st.rho_s == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(std::abs(st.residual) <= 1e-10);
  CHECK(st.contraction_factor == 0.0);  // the zero-delay map is constant
  CHECK(st.characteristics.empty());

  const GridFunction exact = exact_rescaled_pressure(p, st.rho_star, 512);
  double worst = 0.0;
  for (std::size_t i = 0; i < exact.nodes(); ++i)
    worst = std::max(worst,
                     std::abs(st.pressure.values()[i] - exact.values()[i]));
  CHECK(worst < 1e-10);
}

TEST_CASE("delayed solve matches the independent reference slope") {
  const ModelParams p = params_for_rho(1.0, 1.0, 0.01);
  const StationaryState st = solve_stationary(p, 512, 1e-10);
  const double slope = (st.rho_star - st.rho_s) / p.tau;
  // slope frozen from an independent dense solve of the same delay problem
  CHECK(slope == doctest::Approx(0.0315379034).epsilon(1e-7));
  // and it sits within half a percent of the first-order coefficient
  const double r1 = rho_star_1(1.0, p.mu, p.sigma_bar);
  CHECK(std::abs(slope - r1) < 0.005 * r1);
  CHECK(std::abs(st.residual) <= 1e-10 * p.sigma_bar);
  CHECK(st.outer_iterations >= 2);
  CHECK(st.iterations < 100);
  CHECK(st.contraction_factor > 0.0);
  CHECK(st.contraction_factor < 0.05);
  CHECK(st.characteristics.size() == 257);  // one path per node of [0, 1]
}

TEST_CASE("converged pressure satisfies the delayed differential equation") {
  const ModelParams p = params_for_rho(1.0, 1.0, 0.01);
  const int n = 512;
  const StationaryState st = solve_stationary(p, n, 1e-10);
  const double rho = st.rho_star;
  const int m = n / 2;
  const double hx = 2.0 / n;

  // forcing g(yh) = mu rho^3 (sigma(traced height) - sigma_tilde)
  auto g = [&](int i) {
    const double yh = 2.0 * i / n;
    const double origin = characteristic_origin(st.pressure, rho, p.tau, yh);
    const double sig = origin < 1.0 ? sigma0_profile(rho, p.sigma_bar, rho * origin)
                                    : p.sigma_bar;
    return p.mu * rho * rho * rho * (sig - p.sigma_tilde);
  };
  // p'' from a five-point stencil on the stored derivative samples
  double worst = 0.0;
  const std::vector<double>& d = st.pressure.deriv();
  for (int i = 2; i <= m - 2; ++i) {
    const double second =
        (d[i - 2] - 8.0 * d[i - 1] + 8.0 * d[i + 1] - d[i + 2]) / (12.0 * hx);
    worst = std::max(worst, std::abs(second + g(i)));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("measured contraction factor scales linearly with the delay") {
  const StationaryState a = solve_stationary(params_for_rho(1.0, 1.0, 1e-2), 256, 1e-10);
  const StationaryState b = solve_stationary(params_for_rho(1.0, 1.0, 5e-3), 256, 1e-10);
  CHECK(a.contraction_factor < 1.0);
  CHECK(b.contraction_factor < 1.0);
  const double ratio = a.contraction_factor / b.contraction_factor;
  CHECK(ratio > 1.7);
  CHECK(ratio < 2.3);
}

TEST_CASE("unreachable tolerance raises a numerical failure") {
  CHECK_THROWS_AS(solve_stationary(params_for_rho(1.0, 1.0, 0.01), 128, 1e-30),
                  solve_error);
}

TEST_CASE("parameter validation") {
  ModelParams p;
  p.sigma_bar = -1.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = ModelParams{};
  p.tau = -0.1;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p = ModelParams{};
  p.sigma_tilde = 2.0;  // must stay below sigma_bar
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  CHECK_NOTHROW(ModelParams{}.validate());
}
