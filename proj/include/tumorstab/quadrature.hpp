#pragma once

#include <functional>
#include <vector>

namespace tumorstab {

// Composite Simpson integral of f over [a, b] with an even panel count.
double simpson_integral(const std::function<double(double)>& f, double a, double b,
                        int panels);

// Running integrals P[k] = int_{x_0}^{x_k} g over uniformly spaced samples
// g[0..n] with spacing h. Even k uses composite Simpson; odd k adds the
// quadratic partial-panel rule, so every prefix is 4th-order accurate.
// Requires n even and >= 2.
std::vector<double> simpson_prefix(const std::vector<double>& g, double h);

}  // namespace tumorstab
