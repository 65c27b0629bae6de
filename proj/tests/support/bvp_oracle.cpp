#include "bvp_oracle.hpp"

#include <cassert>

namespace oracle {

BvpSolution solve_bvp(double c, const std::function<double(double)>& f,
                      double rho0, double uR, int n) {
  assert(n >= 8);
  const double h = rho0 / n;
  const double h2 = h * h;
  BvpSolution s;
  s.y.resize(n + 1);
  for (int i = 0; i <= n; ++i) s.y[i] = rho0 * i / n;

  // Unknowns u_0 .. u_{n-1}; u_n = uR is known.
  std::vector<double> lo(n, 0.0), di(n, 0.0), up(n, 0.0), rhs(n, 0.0);
  di[0] = -2.0 / h2 - c;
  up[0] = 2.0 / h2;  // ghost node u_{-1} = u_1
  rhs[0] = f(s.y[0]);
  for (int i = 1; i < n; ++i) {
    lo[i] = 1.0 / h2;
    di[i] = -2.0 / h2 - c;
    if (i < n - 1) up[i] = 1.0 / h2;
    rhs[i] = f(s.y[i]);
  }
  rhs[n - 1] -= uR / h2;

  for (int i = 1; i < n; ++i) {
    const double w = lo[i] / di[i - 1];
    di[i] -= w * up[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  s.u.assign(n + 1, 0.0);
  s.u[n] = uR;
  s.u[n - 1] = rhs[n - 1] / di[n - 1];
  for (int i = n - 2; i >= 0; --i) s.u[i] = (rhs[i] - up[i] * s.u[i + 1]) / di[i];
  return s;
}

double right_derivative(const BvpSolution& s) {
  const std::size_t n = s.u.size() - 1;
  const double h = s.y[1] - s.y[0];
  return (25.0 * s.u[n] - 48.0 * s.u[n - 1] + 36.0 * s.u[n - 2] -
          16.0 * s.u[n - 3] + 3.0 * s.u[n - 4]) /
         (12.0 * h);
}

}  // namespace oracle
