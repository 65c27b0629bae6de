#pragma once

#include <cstddef>
#include <vector>

namespace tumorstab {

// Scalar function sampled on a uniform grid: node values plus node
// derivatives. Evaluation between nodes is cubic Hermite, so both the value
// and the first derivative are continuous and 4th-order accurate.
class GridFunction {
 public:
  GridFunction();  // zero function on [0,1], 3 nodes
  GridFunction(double lo, double hi, std::vector<double> values,
               std::vector<double> deriv);

  static GridFunction zero(double lo, double hi, std::size_t nodes);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double step() const { return step_; }
  std::size_t nodes() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  const std::vector<double>& deriv() const { return deriv_; }

  double operator()(double x) const;  // value at x, x in [lo, hi]
  double d1(double x) const;          // first derivative at x

 private:
  std::size_t cell(double x) const;  // throws std::domain_error outside [lo, hi]

  double lo_, hi_, step_;
  std::vector<double> values_, deriv_;
};

}  // namespace tumorstab
