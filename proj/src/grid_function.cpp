#include "tumorstab/grid_function.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tumorstab {

GridFunction::GridFunction() : GridFunction(0.0, 1.0, {0, 0, 0}, {0, 0, 0}) {}

GridFunction::GridFunction(double lo, double hi, std::vector<double> values,
                           std::vector<double> deriv)
    : lo_(lo), hi_(hi), values_(std::move(values)), deriv_(std::move(deriv)) {
  if (!(hi_ > lo_)) throw std::invalid_argument("grid needs hi > lo");
  if (values_.size() < 3) throw std::invalid_argument("grid needs at least 3 nodes");
  if (values_.size() != deriv_.size())
    throw std::invalid_argument("value and derivative arrays must have equal length");
  step_ = (hi_ - lo_) / static_cast<double>(values_.size() - 1);
}

GridFunction GridFunction::zero(double lo, double hi, std::size_t nodes) {
  return GridFunction(lo, hi, std::vector<double>(nodes, 0.0),
                      std::vector<double>(nodes, 0.0));
}

std::size_t GridFunction::cell(double x) const {
  if (x < lo_ || x > hi_) throw std::domain_error("evaluation outside the grid domain");
  const auto last = values_.size() - 2;
  const auto i = static_cast<std::size_t>((x - lo_) / step_);
  return std::min(i, last);
}

double GridFunction::operator()(double x) const {
  const auto i = cell(x);
  const double t = (x - (lo_ + static_cast<double>(i) * step_)) / step_;
  const double u = 1.0 - t;
  const double h00 = (1.0 + 2.0 * t) * u * u;
  const double h10 = t * u * u;
  const double h01 = t * t * (3.0 - 2.0 * t);
  const double h11 = t * t * (t - 1.0);
  return h00 * values_[i] + h10 * step_ * deriv_[i] + h01 * values_[i + 1] +
         h11 * step_ * deriv_[i + 1];
}

double GridFunction::d1(double x) const {
  const auto i = cell(x);
  const double t = (x - (lo_ + static_cast<double>(i) * step_)) / step_;
  const double dh00 = 6.0 * t * (t - 1.0);
  const double dh10 = (1.0 - t) * (1.0 - 3.0 * t);
  const double dh01 = 6.0 * t * (1.0 - t);
  const double dh11 = t * (3.0 * t - 2.0);
  return dh00 * values_[i] / step_ + dh10 * deriv_[i] + dh01 * values_[i + 1] / step_ +
         dh11 * deriv_[i + 1];
}

}  // namespace tumorstab
