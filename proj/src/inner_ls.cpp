#include "fbp/inner_ls.hpp"

#include <algorithm>
#include <cmath>

#include "fbp/errors.hpp"

namespace fbp {

std::vector<double> default_lambda_grid() {
  std::vector<double> grid(21);
  const double lo = std::log(1e-12), hi = std::log(1e-2);
  for (int i = 0; i < 21; ++i)
    grid[static_cast<std::size_t>(i)] = std::exp(lo + (hi - lo) * i / 20.0);
  grid.front() = 1e-12;
  grid.back() = 1e-2;
  return grid;
}

InnerSolution tikhonov_sweep(const Eigen::MatrixXd& D, const Eigen::VectorXd& g,
                             const std::vector<double>& lambda_grid,
                             double coeff_cap) {
  if (D.rows() != g.size()) throw MeshMismatch("D and g row counts differ");
  if (D.rows() < D.cols())
    throw Error("system must have at least as many rows as unknowns");
  if (lambda_grid.empty()) throw Error("lambda grid is empty");

  const Eigen::Index nb = D.cols();
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(D);
  const Eigen::MatrixXd R =
      qr.matrixQR().topRows(nb).triangularView<Eigen::Upper>();
  const Eigen::VectorXd qtg_full = qr.householderQ().adjoint() * g;
  const Eigen::VectorXd qtg = qtg_full.head(nb);

  Eigen::MatrixXd stacked(2 * nb, nb);
  Eigen::VectorXd rhs(2 * nb);
  rhs.head(nb) = qtg;
  rhs.tail(nb).setZero();

  for (double lambda : lambda_grid) {
    if (lambda < 0.0) throw Error("lambda must be nonnegative");
    stacked.topRows(nb) = R;
    stacked.bottomRows(nb) =
        lambda * Eigen::MatrixXd::Identity(nb, nb);
    // Rank-revealing solve so a singular R with lambda = 0 still yields a
    // least-squares answer instead of NaNs.
    const Eigen::VectorXd a =
        stacked.colPivHouseholderQr().solve(rhs);
    if (a.lpNorm<Eigen::Infinity>() <= coeff_cap) {
      InnerSolution sol;
      sol.lambda = lambda;
      sol.residual_sq = (D * a - g).squaredNorm();
      sol.a_coeffs.assign(a.data(), a.data() + nb);
      return sol;
    }
  }
  throw AllLambdasRejected(
      "no regularization level kept the coefficients under the cap");
}

}  // namespace fbp
