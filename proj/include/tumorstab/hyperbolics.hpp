#pragma once

namespace tumorstab {

// Arguments of the ratio kernels cosh(a*y)/cosh(a*rho) and
// sinh(a*y)/cosh(a*rho): frequency a, height y, layer thickness rho.
struct KernelArgs {
  double a;
  double y;
  double rho;
};

// cosh(a*y)/cosh(a*rho), overflow-safe for arbitrarily large a*rho.
double cosh_ratio(const KernelArgs& args);

// sinh(a*y)/cosh(a*rho); exactly 0 at y=0 and tanh(a*rho) at y=rho.
double sinh_ratio(const KernelArgs& args);

// tanh(rho)/rho for rho > 0; strictly decreasing from 1 toward 0.
double tanh_over_rho(double rho);

}  // namespace tumorstab
