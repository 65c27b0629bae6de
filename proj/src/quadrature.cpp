#include "tumorstab/quadrature.hpp"

#include <stdexcept>

namespace tumorstab {

double simpson_integral(const std::function<double(double)>& f, double a, double b,
                        int panels) {
  if (panels < 2 || panels % 2 != 0)
    throw std::invalid_argument("simpson_integral needs an even panel count >= 2");
  const double h = (b - a) / panels;
  double odd = 0.0, even = 0.0;
  for (int k = 1; k < panels; k += 2) odd += f(a + k * h);
  for (int k = 2; k < panels; k += 2) even += f(a + k * h);
  return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

std::vector<double> simpson_prefix(const std::vector<double>& g, double h) {
  const auto n = g.size() - 1;
  if (g.size() < 3 || n % 2 != 0)
    throw std::invalid_argument("simpson_prefix needs an even sample interval count");
  std::vector<double> prefix(n + 1, 0.0);
  for (std::size_t k = 2; k <= n; k += 2)
    prefix[k] = prefix[k - 2] + h * (g[k - 2] + 4.0 * g[k - 1] + g[k]) / 3.0;
  // Odd prefixes integrate the interpolating quadratic over half its span:
  //   int_{x_{k-1}}^{x_k} = h (5 g_{k-1} + 8 g_k - g_{k+1}) / 12.
  for (std::size_t k = 1; k <= n; k += 2)
    prefix[k] = prefix[k - 1] + h * (5.0 * g[k - 1] + 8.0 * g[k] - g[k + 1]) / 12.0;
  return prefix;
}

}  // namespace tumorstab
