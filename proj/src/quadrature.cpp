#include "fbp/quadrature.hpp"

#include <cmath>
#include <cstddef>

#include "fbp/errors.hpp"

namespace fbp {

std::vector<double> cumulative_integral(const std::vector<double>& values, double h) {
  const std::size_t n = values.size();
  if (n < 2) {
    throw MeshMismatch("cumulative_integral: need at least two mesh points");
  }
  std::vector<double> out(n, 0.0);
  const double* v = values.data();
  if (n < 4) {
    for (std::size_t j = 1; j < n; ++j) {
      out[j] = out[j - 1] + 0.5 * h * (v[j - 1] + v[j]);
    }
    return out;
  }
  // Increment over [y_{j-1}, y_j] from the cubic through four neighbouring
  // samples; the first two steps use the cubic anchored at the left edge.
  const double c = h / 24.0;
  out[1] = c * (9.0 * v[0] + 19.0 * v[1] - 5.0 * v[2] + v[3]);
  out[2] = out[1] + c * (-v[0] + 13.0 * v[1] + 13.0 * v[2] - v[3]);
  for (std::size_t j = 3; j < n; ++j) {
    out[j] = out[j - 1] + c * (v[j - 3] - 5.0 * v[j - 2] + 19.0 * v[j - 1] + 9.0 * v[j]);
  }
  return out;
}

double integrate(const std::vector<double>& values, double h) {
  const std::size_t n = values.size();
  if (n < 2) {
    throw MeshMismatch("integrate: need at least two mesh points");
  }
  if (n < 4) {
    double acc = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
      acc += 0.5 * h * (values[j - 1] + values[j]);
    }
    return acc;
  }
  const double c = h / 24.0;
  const double* v = values.data();
  double acc = c * (9.0 * v[0] + 19.0 * v[1] - 5.0 * v[2] + v[3]);
  acc += c * (-v[0] + 13.0 * v[1] + 13.0 * v[2] - v[3]);
  for (std::size_t j = 3; j < n; ++j) {
    acc += c * (v[j - 3] - 5.0 * v[j - 2] + 19.0 * v[j - 1] + 9.0 * v[j]);
  }
  return acc;
}

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(double (*fn)(double, const void*), const void* ctx, double a,
                     double fa, double b, double fb, double m, double fm, double whole,
                     double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = fn(lm, ctx);
  const double frm = fn(rm, ctx);
  const double left = simpson(a, fa, m, fm, flm);
  const double right = simpson(m, fm, b, fb, frm);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return adaptive_step(fn, ctx, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_step(fn, ctx, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_integral(double (*fn)(double, const void*), const void* ctx, double a,
                         double b, double tol) {
  const double m = 0.5 * (a + b);
  const double fa = fn(a, ctx);
  const double fb = fn(b, ctx);
  const double fm = fn(m, ctx);
  const double whole = simpson(a, fa, b, fb, fm);
  return adaptive_step(fn, ctx, a, fa, b, fb, m, fm, whole, tol, 40);
}

}  // namespace fbp
