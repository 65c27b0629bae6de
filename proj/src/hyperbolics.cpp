#include "tumorstab/hyperbolics.hpp"

#include <cmath>
#include <stdexcept>

namespace tumorstab {

namespace {

void check(const KernelArgs& k) {
  if (!(k.a > 0.0)) throw std::domain_error("kernel frequency a must be positive");
  if (!(k.rho > 0.0)) throw std::domain_error("kernel thickness rho must be positive");
}

}  // namespace

// Both ratios are evaluated in the exponential-difference form
//   e^{a(|y|-rho)} (1 -+ e^{-2a|y|}) / (1 + e^{-2a rho}),
// unconditionally, so no cosh/sinh is ever formed and the value stays finite
// far beyond the overflow point of cosh. For |y| <= rho every factor is <= 1.
double cosh_ratio(const KernelArgs& k) {
  check(k);
  const double ay = k.a * std::fabs(k.y);
  const double ar = k.a * k.rho;
  return std::exp(ay - ar) * (1.0 + std::exp(-2.0 * ay)) / (1.0 + std::exp(-2.0 * ar));
}

double sinh_ratio(const KernelArgs& k) {
  check(k);
  const double ay = k.a * std::fabs(k.y);
  const double ar = k.a * k.rho;
  const double r =
      std::exp(ay - ar) * (1.0 - std::exp(-2.0 * ay)) / (1.0 + std::exp(-2.0 * ar));
  return k.y < 0.0 ? -r : r;
}

double tanh_over_rho(double rho) {
  if (!(rho > 0.0)) throw std::domain_error("rho must be positive");
  return std::tanh(rho) / rho;
}

}  // namespace tumorstab
