#include "fbp/spline.hpp"

#include <algorithm>
#include <cmath>

#include "fbp/errors.hpp"

namespace fbp {

CubicSpline::CubicSpline(double x0, double h, std::vector<double> values)
    : x0_(x0), h_(h), y_(std::move(values)) {
  const std::size_t n = y_.size();
  if (n < 3) {
    throw Error("CubicSpline: need at least three nodes");
  }
  // Natural end conditions: solve the tridiagonal system for the second
  // derivatives m_i, with m_0 = m_{n-1} = 0.
  m_.assign(n, 0.0);
  std::vector<double> c(n, 0.0), d(n, 0.0);
  const double inv_h2 = 1.0 / (h_ * h_);
  // Forward sweep on the interior rows: 1*m_{i-1} + 4*m_i + 1*m_{i+1} = rhs_i.
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double rhs = 6.0 * (y_[i - 1] - 2.0 * y_[i] + y_[i + 1]) * inv_h2;
    const double denom = 4.0 - c[i - 1];
    c[i] = 1.0 / denom;
    d[i] = (rhs - d[i - 1]) / denom;
  }
  for (std::size_t i = n - 2; i >= 1; --i) {
    m_[i] = d[i] - c[i] * m_[i + 1];
  }
}

double CubicSpline::value(double x) const {
  const std::size_t n = y_.size();
  double u = (x - x0_) / h_;
  u = std::clamp(u, 0.0, double(n - 1));
  std::size_t j = std::min(static_cast<std::size_t>(u), n - 2);
  const double t = u - j;
  const double s = 1.0 - t;
  const double h2_6 = h_ * h_ / 6.0;
  return s * y_[j] + t * y_[j + 1] +
         h2_6 * ((s * s * s - s) * m_[j] + (t * t * t - t) * m_[j + 1]);
}

double CubicSpline::derivative(double x) const {
  const std::size_t n = y_.size();
  double u = (x - x0_) / h_;
  u = std::clamp(u, 0.0, double(n - 1));
  std::size_t j = std::min(static_cast<std::size_t>(u), n - 2);
  const double t = u - j;
  const double s = 1.0 - t;
  return (y_[j + 1] - y_[j]) / h_ +
         h_ / 6.0 * ((1.0 - 3.0 * s * s) * m_[j] + (3.0 * t * t - 1.0) * m_[j + 1]);
}

}  // namespace fbp
