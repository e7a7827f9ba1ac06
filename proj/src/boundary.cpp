#include "fbp/boundary.hpp"

#include <cmath>
#include <cstddef>

#include "fbp/errors.hpp"

namespace fbp {

TimeGrid build_time_grid(double T, std::size_t n_t) {
  if (T <= 0.0) throw Error("horizon must be positive");
  if (n_t < 2) throw Error("time grid needs at least 2 nodes");
  TimeGrid grid;
  grid.T = T;
  grid.n_t = n_t;
  grid.nodes.resize(n_t);
  grid.weights.assign(n_t, 1.0);
  const double step = M_PI / (2.0 * static_cast<double>(n_t));
  for (std::size_t n = 1; n <= n_t; ++n)
    grid.nodes[n - 1] = T * std::sin(static_cast<double>(n) * step);
  grid.nodes.back() = T;  // sin(pi/2) exactly
  grid.weights.front() = 0.5;
  grid.weights.back() = 0.5;
  return grid;
}

double discrete_norm(const TimeGrid& grid, const std::vector<double>& values) {
  if (values.size() != grid.nodes.size())
    throw LengthMismatch("value array does not match the time grid");
  double acc = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i)
    acc += grid.weights[i] * values[i] * values[i];
  return std::sqrt(acc);
}

double jacobi_p(int n, double alpha, double beta, double x) {
  if (n < 0) return 0.0;
  if (n == 0) return 1.0;
  double p0 = 1.0;
  double p1 = (alpha + 1.0) + (alpha + beta + 2.0) * 0.5 * (x - 1.0);
  for (int k = 2; k <= n; ++k) {
    const double kk = k;
    const double c0 = 2.0 * kk * (kk + alpha + beta) *
                      (2.0 * kk + alpha + beta - 2.0);
    const double c1 = (2.0 * kk + alpha + beta - 1.0) *
                      ((2.0 * kk + alpha + beta) *
                           (2.0 * kk + alpha + beta - 2.0) * x +
                       alpha * alpha - beta * beta);
    const double c2 = 2.0 * (kk + alpha - 1.0) * (kk + beta - 1.0) *
                      (2.0 * kk + alpha + beta);
    const double p2 = (c1 * p1 - c2 * p0) / c0;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

void boundary_basis_row(int K, double T, double t, int deriv, double* out) {
  if (K < 0) throw Error("basis index bound must be nonnegative");
  if (T <= 0.0) throw Error("horizon must be positive");
  if (deriv < 0 || deriv > 2) throw Error("deriv must be 0, 1 or 2");
  if (t < 0.0 || t > T * (1.0 + 1e-12)) throw OutOfDomain("t outside [0, T]");
  if (deriv > 0 && t <= 0.0)
    throw OutOfDomain("derivatives of the sqrt(t) basis need t > 0");

  const double u = std::sqrt(t / T);
  const double x = 2.0 * u - 1.0;
  for (int k = 0; k <= K; ++k) {
    const double scale = std::sqrt(k + 2.0) / T;
    const double P = jacobi_p(k, 0.0, 3.0, x);
    if (deriv == 0) {
      out[k] = scale * std::sqrt(t) * P;
      continue;
    }
    // d/dx P_k^{(0,3)} = (k+4)/2 * P_{k-1}^{(1,4)}; chain through x = 2u - 1.
    const double dP_du = (k + 4.0) * jacobi_p(k - 1, 1.0, 4.0, x);
    const double g_u = P + u * dP_du;  // d(u P)/du
    if (deriv == 1) {
      // dt -> du: du/dt = 1 / (2 sqrt(t T)).
      out[k] = std::sqrt((k + 2.0) / T) * g_u / (2.0 * std::sqrt(t * T));
      continue;
    }
    const double d2P_du2 =
        (k + 4.0) * (k + 5.0) * jacobi_p(k - 2, 2.0, 5.0, x);
    const double g_uu = 2.0 * dP_du + u * d2P_du2;
    out[k] = std::sqrt((k + 2.0) / T) *
             (g_uu / (4.0 * t * T) - g_u / (4.0 * t * std::sqrt(t * T)));
  }
}

BoundaryModel::BoundaryModel(int K_, double T_, std::vector<double> b)
    : K(K_), T(T_), b_coeffs(std::move(b)) {
  if (b_coeffs.size() != static_cast<std::size_t>(K) + 1)
    throw LengthMismatch("boundary coefficient count must be K + 1");
  if (T <= 0.0) throw Error("horizon must be positive");
}

namespace {

double boundary_eval(const BoundaryModel& m, double t, int deriv) {
  std::vector<double> row(static_cast<std::size_t>(m.K) + 1);
  boundary_basis_row(m.K, m.T, t, deriv, row.data());
  double acc = 0.0;
  for (std::size_t k = 0; k < row.size(); ++k) acc += m.b_coeffs[k] * row[k];
  return acc;
}

}  // namespace

double BoundaryModel::value(double t) const {
  if (t == 0.0) return 0.0;  // every member carries a sqrt(t) factor
  return boundary_eval(*this, t, 0);
}

double BoundaryModel::derivative(double t) const {
  return boundary_eval(*this, t, 1);
}

double BoundaryModel::second_derivative(double t) const {
  return boundary_eval(*this, t, 2);
}

}  // namespace fbp
