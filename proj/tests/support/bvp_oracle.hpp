#pragma once

#include <functional>
#include <vector>

namespace oracle {

struct BvpSolution {
  std::vector<double> y;
  std::vector<double> u;
};

// Independent second-order finite-difference solve of
//   u'' - c u = f(y)  on (0, rho0),  u'(0) = 0,  u(rho0) = uR,
// with a ghost node enforcing the Neumann side and a Thomas solve.
BvpSolution solve_bvp(double c, const std::function<double(double)>& f,
                      double rho0, double uR, int n);

// One-sided fourth-order derivative at the right endpoint.
double right_derivative(const BvpSolution& s);

}  // namespace oracle
