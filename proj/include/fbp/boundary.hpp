#pragma once

#include <cstddef>
#include <vector>

namespace fbp {

// Nodes t_n = T sin(n pi / (2 N_t)), n = 1..N_t, with the halved-endpoint
// weights of the discrete norm. t = 0 is deliberately excluded.
struct TimeGrid {
  double T = 0.0;
  std::size_t n_t = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

TimeGrid build_time_grid(double T, std::size_t n_t);

// || v || = sqrt( sum_i w_i v_i^2 ) over the grid's nodes.
double discrete_norm(const TimeGrid& grid, const std::vector<double>& values);

// Orthonormal boundary basis on [0, T]:
//   beta_k(t) = sqrt((k+2) t) / T * P_k^{(0,3)}(2 sqrt(t/T) - 1),
// so that int_0^T beta_j beta_k dt = delta_jk for every T. Each member
// carries a sqrt(t) factor, hence any combination vanishes at t = 0.
//
// Fills out[0..K] with beta_k(t), or the first or second t-derivative for
// deriv = 1, 2. Derivatives require t > 0.
void boundary_basis_row(int K, double T, double t, int deriv, double* out);

// Jacobi polynomial P_n^{(alpha,beta)}(x) by the three-term recurrence;
// n < 0 evaluates to 0, matching the derivative-shift conventions.
double jacobi_p(int n, double alpha, double beta, double x);

// s_K(t) = sum_k b_k beta_k(t) and its first two t-derivatives.
struct BoundaryModel {
  int K = 0;
  double T = 0.0;
  std::vector<double> b_coeffs;

  BoundaryModel() = default;
  BoundaryModel(int K_, double T_, std::vector<double> b);

  double value(double t) const;
  double derivative(double t) const;
  double second_derivative(double t) const;
};

}  // namespace fbp
