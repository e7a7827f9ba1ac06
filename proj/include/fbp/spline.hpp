#pragma once

#include <cstddef>
#include <vector>

namespace fbp {

// Natural cubic spline on a uniform mesh. Stores the node values and the
// second derivatives; evaluation clamps to the mesh range.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(double x0, double h, std::vector<double> values);

  double value(double x) const;
  double derivative(double x) const;

  double x_min() const { return x0_; }
  double x_max() const { return x0_ + h_ * (y_.size() - 1); }
  const std::vector<double>& node_values() const { return y_; }
  const std::vector<double>& second_derivatives() const { return m_; }

 private:
  double x0_ = 0.0;
  double h_ = 1.0;
  std::vector<double> y_, m_;
};

}  // namespace fbp
