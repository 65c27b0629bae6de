#include "tumorstab/stationary.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "tumorstab/errors.hpp"
#include "tumorstab/hyperbolics.hpp"
#include "tumorstab/quadrature.hpp"

namespace tumorstab {

namespace {

constexpr int kCharacteristicSteps = 16;
constexpr int kInnerCap = 200;
constexpr int kOuterCap = 200;

// Nutrient at rescaled height yh for thickness rho: cosh(rho*yh)/cosh(rho)
// inside the layer, the external level sigma_bar beyond it.
double sigma_rescaled(double yh, double rho, double sigma_bar) {
  if (yh >= 1.0) return sigma_bar;
  return sigma_bar * cosh_ratio({rho, yh, 1.0});
}

double step_velocity(const GridFunction& p, double inv_rho3, double x) {
  if (x < 0.0 || x > 2.0)
    throw solve_error(error_kind::characteristic_escape,
                      "backward characteristic left [0,2]; delay too large");
  return -inv_rho3 * p.d1(x);
}

// One backward RK4 sweep; when out != nullptr the 17 samples and their
// velocities are recorded (index 0 is s = -tau).
double trace_back(const GridFunction& p, double rho, double tau, double y,
                  std::vector<double>* out_values, std::vector<double>* out_deriv) {
  const double inv_rho3 = 1.0 / (rho * rho * rho);
  const double ds = -tau / kCharacteristicSteps;
  double xi = y;
  if (out_values) {
    (*out_values)[kCharacteristicSteps] = xi;
    (*out_deriv)[kCharacteristicSteps] = step_velocity(p, inv_rho3, xi);
  }
  for (int k = 1; k <= kCharacteristicSteps; ++k) {
    const double v1 = step_velocity(p, inv_rho3, xi);
    const double v2 = step_velocity(p, inv_rho3, xi + 0.5 * ds * v1);
    const double v3 = step_velocity(p, inv_rho3, xi + 0.5 * ds * v2);
    const double v4 = step_velocity(p, inv_rho3, xi + ds * v3);
    xi += ds * (v1 + 2.0 * v2 + 2.0 * v3 + v4) / 6.0;
    if (xi < 0.0 || xi > 2.0)
      throw solve_error(error_kind::characteristic_escape,
                        "backward characteristic left [0,2]; delay too large");
    if (out_values) {
      (*out_values)[kCharacteristicSteps - k] = xi;
      (*out_deriv)[kCharacteristicSteps - k] = step_velocity(p, inv_rho3, xi);
    }
  }
  return xi;
}

void check_map_args(const GridFunction& p, double rho, const ModelParams& params,
                    int grid_n) {
  params.validate();
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  if (grid_n < 64)
    throw std::invalid_argument("quadrature resolution too low: grid_n must be >= 64");
  if (grid_n % 4 != 0)
    throw std::invalid_argument("grid_n must be a multiple of 4");
  if (p.lo() != 0.0 || p.hi() != 2.0)
    throw std::invalid_argument("pressure must be defined on [0,2]");
}

struct MapResult {
  GridFunction p;
  double residual;  // integral over [0,1] of (sigma(traced) - sigma_tilde)
};

MapResult apply_map(const GridFunction& p, double rho, const ModelParams& params,
                    int grid_n) {
  const int m = grid_n / 2;  // node index of yh = 1
  const double h = 2.0 / grid_n;
  const double mu_rho3 = params.mu * rho * rho * rho;

  std::vector<double> g(m + 1);
  for (int i = 0; i <= m; ++i) {
    const double z = i * h;
    const double origin =
        params.tau == 0.0 ? z : trace_back(p, rho, params.tau, z, nullptr, nullptr);
    g[i] = mu_rho3 * (sigma_rescaled(origin, rho, params.sigma_bar) - params.sigma_tilde);
  }
  const std::vector<double> inner = simpson_prefix(g, h);
  const std::vector<double> outer = simpson_prefix(inner, h);

  // value(yh) = int_yh^1 inner = outer(1) - outer(yh); d1 = -inner; linear
  // continuation with slope -inner(1) past yh = 1. Both stated boundary
  // conditions, value(1) = 0 and d1(0) = 0, hold exactly.
  std::vector<double> values(grid_n + 1), deriv(grid_n + 1);
  for (int i = 0; i <= m; ++i) {
    values[i] = outer[m] - outer[i];
    deriv[i] = -inner[i];
  }
  for (int i = m + 1; i <= grid_n; ++i) {
    values[i] = -inner[m] * (i * h - 1.0);
    deriv[i] = -inner[m];
  }
  return {GridFunction(0.0, 2.0, std::move(values), std::move(deriv)),
          inner[m] / mu_rho3};
}

// Stop metric: largest change across values, derivatives, and second
// differences of values, so convergence is enforced through two derivatives.
double change_norm(const GridFunction& a, const GridFunction& b) {
  const auto& av = a.values();
  const auto& bv = b.values();
  const auto& ad = a.deriv();
  const auto& bd = b.deriv();
  double worst = 0.0;
  for (std::size_t i = 0; i < av.size(); ++i) {
    worst = std::max(worst, std::fabs(av[i] - bv[i]));
    worst = std::max(worst, std::fabs(ad[i] - bd[i]));
  }
  for (std::size_t i = 1; i + 1 < av.size(); ++i) {
    const double d2a = av[i + 1] - 2.0 * av[i] + av[i - 1];
    const double d2b = bv[i + 1] - 2.0 * bv[i] + bv[i - 1];
    worst = std::max(worst, std::fabs(d2a - d2b));
  }
  return worst;
}

double sup_norm(const GridFunction& f) {
  double worst = 0.0;
  for (double v : f.values()) worst = std::max(worst, std::fabs(v));
  return worst;
}

struct FixedPointResult {
  GridFunction p;
  double residual;
  int iterations;
  double contraction;  // largest measured ratio, 0 if never measurable
};

FixedPointResult run_fixed_point(double rho, const ModelParams& params, int grid_n,
                                 double tol, const GridFunction* warm) {
  GridFunction p =
      warm ? *warm : GridFunction::zero(0.0, 2.0, static_cast<std::size_t>(grid_n) + 1);
  double prev_change = -1.0;
  double contraction = 0.0;
  int bad_ratios = 0;
  for (int it = 1; it <= kInnerCap; ++it) {
    MapResult next = apply_map(p, rho, params, grid_n);
    const double change = change_norm(next.p, p);
    const double scale = 1.0 + sup_norm(next.p);
    const double floor = 100.0 * std::numeric_limits<double>::epsilon() * scale;
    if (prev_change > floor && change > floor) {
      const double ratio = change / prev_change;
      contraction = std::max(contraction, ratio);
      bad_ratios = ratio >= 1.0 ? bad_ratios + 1 : 0;
      if (bad_ratios >= 2)
        throw solve_error(error_kind::contraction_failure,
                          "pressure iteration is not contracting (ratio >= 1)");
    }
    prev_change = change;
    p = std::move(next.p);
    if (change <= tol * scale) return {std::move(p), next.residual, it, contraction};
  }
  throw solve_error(error_kind::no_convergence,
                    "pressure iteration did not converge within 200 sweeps");
}

}  // namespace

void ModelParams::validate() const {
  if (!(sigma_bar > 0.0)) throw std::invalid_argument("sigma_bar must be positive");
  if (!(sigma_tilde > 0.0)) throw std::invalid_argument("sigma_tilde must be positive");
  if (!(sigma_tilde < sigma_bar))
    throw std::invalid_argument("sigma_tilde must be below sigma_bar");
  if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be nonnegative");
}

double solve_rho_s(const ModelParams& params) {
  params.validate();
  const double target = params.sigma_tilde / params.sigma_bar;  // in (0,1)
  const auto f = [&](double rho) { return tanh_over_rho(rho) - target; };

  double lo = 1e-8, hi = 1.0;
  while (f(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) throw solve_error(error_kind::bracket_sign, "no bracket for rho_s");
  }
  // Safeguarded secant: every step stays inside the shrinking bisection bracket.
  double x = 0.5 * (lo + hi), fx = f(x);
  double x_prev = lo, f_prev = f(lo);
  for (int it = 0; it < 200; ++it) {
    if (std::fabs(fx) <= 1e-12) return x;
    if (fx > 0.0)
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
    fx = f(x);
  }
  return x;
}

namespace {

void check_profile_args(double rho0, double sigma_bar, double y) {
  if (!(rho0 > 0.0)) throw std::domain_error("rho0 must be positive");
  if (!(sigma_bar > 0.0)) throw std::domain_error("sigma_bar must be positive");
  if (y < 0.0 || y > rho0)
    throw std::domain_error("profile evaluation outside [0, rho0]");
}

void check_p0_consistency(double rho0, double sigma_bar, double sigma_tilde) {
  if (std::fabs(sigma_bar * tanh_over_rho(rho0) - sigma_tilde) > 1e-10 * sigma_bar)
    throw std::invalid_argument(
        "sigma_tilde is inconsistent with rho0: need sigma_bar*tanh(rho0)/rho0");
}

}  // namespace

double sigma0_profile(double rho0, double sigma_bar, double y) {
  check_profile_args(rho0, sigma_bar, y);
  return sigma_bar * cosh_ratio({1.0, y, rho0});
}

double sigma0_profile_d1(double rho0, double sigma_bar, double y) {
  check_profile_args(rho0, sigma_bar, y);
  return sigma_bar * sinh_ratio({1.0, y, rho0});
}

double sigma0_profile_d2(double rho0, double sigma_bar, double y) {
  return sigma0_profile(rho0, sigma_bar, y);
}

double p0_profile(double rho0, double mu, double sigma_bar, double sigma_tilde,
                  double y) {
  check_profile_args(rho0, sigma_bar, y);
  check_p0_consistency(rho0, sigma_bar, sigma_tilde);
  return 0.5 * mu * sigma_tilde * (y * y - rho0 * rho0) +
         mu * sigma_bar * (1.0 - cosh_ratio({1.0, y, rho0}));
}

double p0_profile_d1(double rho0, double mu, double sigma_bar, double sigma_tilde,
                     double y) {
  check_profile_args(rho0, sigma_bar, y);
  check_p0_consistency(rho0, sigma_bar, sigma_tilde);
  return mu * sigma_tilde * y - mu * sigma_bar * sinh_ratio({1.0, y, rho0});
}

double p0_profile_d2(double rho0, double mu, double sigma_bar, double sigma_tilde,
                     double y) {
  check_profile_args(rho0, sigma_bar, y);
  check_p0_consistency(rho0, sigma_bar, sigma_tilde);
  return mu * sigma_tilde - mu * sigma_bar * cosh_ratio({1.0, y, rho0});
}

double p0_profile_d3(double rho0, double mu, double sigma_bar, double sigma_tilde,
                     double y) {
  check_profile_args(rho0, sigma_bar, y);
  check_p0_consistency(rho0, sigma_bar, sigma_tilde);
  return -mu * sigma_bar * sinh_ratio({1.0, y, rho0});
}

GridFunction apply_fixed_point_map(const GridFunction& p, double rho,
                                   const ModelParams& params, int grid_n) {
  check_map_args(p, rho, params, grid_n);
  return apply_map(p, rho, params, grid_n).p;
}

double characteristic_origin(const GridFunction& p, double rho, double tau, double y) {
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  if (!(tau >= 0.0)) throw std::invalid_argument("tau must be nonnegative");
  if (y < 0.0 || y > 1.0) throw std::invalid_argument("start height must be in [0,1]");
  if (tau == 0.0) return y;
  return trace_back(p, rho, tau, y, nullptr, nullptr);
}

GridFunction characteristic_path(const GridFunction& p, double rho, double tau,
                                 double y) {
  if (!(rho > 0.0)) throw std::invalid_argument("rho must be positive");
  if (!(tau > 0.0)) throw std::invalid_argument("a path needs tau > 0");
  if (y < 0.0 || y > 1.0) throw std::invalid_argument("start height must be in [0,1]");
  std::vector<double> values(kCharacteristicSteps + 1), deriv(kCharacteristicSteps + 1);
  trace_back(p, rho, tau, y, &values, &deriv);
  return GridFunction(-tau, 0.0, std::move(values), std::move(deriv));
}

double stationary_residual(const ModelParams& params, double rho, int grid_n,
                           double tol) {
  check_map_args(GridFunction::zero(0.0, 2.0, static_cast<std::size_t>(grid_n) + 1),
                 rho, params, grid_n);
  return run_fixed_point(rho, params, grid_n, tol, nullptr).residual;
}

StationaryState solve_stationary(const ModelParams& params, int grid_n, double tol) {
  params.validate();
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  check_map_args(GridFunction::zero(0.0, 2.0, static_cast<std::size_t>(grid_n) + 1),
                 1.0, params, grid_n);

  StationaryState state;
  state.rho_s = solve_rho_s(params);

  double lo = 0.5 * state.rho_s, hi = 1.5 * state.rho_s;
  const GridFunction* warm = nullptr;
  GridFunction warm_store;
  int total_inner = 0;
  double contraction = 0.0;

  const auto residual_at = [&](double rho) {
    FixedPointResult r = run_fixed_point(rho, params, grid_n, tol, warm);
    total_inner += r.iterations;
    contraction = std::max(contraction, r.contraction);
    warm_store = std::move(r.p);
    warm = &warm_store;
    return r.residual;
  };

  double f_lo = residual_at(lo);
  double f_hi = residual_at(hi);
  if (!(f_lo > 0.0 && f_hi < 0.0))
    throw solve_error(error_kind::bracket_sign,
                      "nutrient balance does not change sign on [rho_s/2, 3 rho_s/2]");

  double x = hi, fx = f_hi, x_prev = lo, f_prev = f_lo;
  int outer = 2;
  for (; outer < kOuterCap; ++outer) {
    if (std::fabs(fx) <= tol * params.sigma_bar) break;
    if (fx > 0.0)
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
    fx = residual_at(x);
  }
  if (std::fabs(fx) > tol * params.sigma_bar)
    throw solve_error(error_kind::no_convergence,
                      "thickness root-find did not converge within 200 steps");

  state.rho_star = x;
  state.residual = fx;
  state.pressure = warm_store;
  state.iterations = total_inner;
  state.outer_iterations = outer;
  state.contraction_factor = contraction;
  if (params.tau > 0.0) {
    const int m = grid_n / 2;
    const double h = 2.0 / grid_n;
    state.characteristics.reserve(m + 1);
    for (int i = 0; i <= m; ++i)
      state.characteristics.push_back(
          characteristic_path(state.pressure, state.rho_star, params.tau, i * h));
  }
  return state;
}

}  // namespace tumorstab
