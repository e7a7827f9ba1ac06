#pragma once

#include <Eigen/Dense>
#include <vector>

namespace fbp {

struct InnerSolution {
  std::vector<double> a_coeffs;
  double lambda = 0.0;
  double residual_sq = 0.0;  // explicit ||D a - g||^2, cancellation-free
};

// Geometric grid 1e-12 .. 1e-2, 21 points.
std::vector<double> default_lambda_grid();

// Ridge sweep: factors D once (Householder QR), then for each lambda in
// ascending order solves min ||D a - g||^2 + lambda^2 ||a||^2 through the
// stacked triangular system [R; lambda I]. Returns the solution for the
// smallest lambda whose coefficients satisfy ||a||_inf <= coeff_cap, with
// the residual recomputed explicitly from D. Throws AllLambdasRejected when
// no lambda meets the cap.
InnerSolution tikhonov_sweep(const Eigen::MatrixXd& D, const Eigen::VectorXd& g,
                             const std::vector<double>& lambda_grid,
                             double coeff_cap);

}  // namespace fbp
