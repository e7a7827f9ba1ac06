#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fbp/basis.hpp"
#include "fbp/boundary.hpp"
#include "fbp/inner_ls.hpp"

namespace fbp {

// Boundary data of the general problem: Robin weights at y = 0 and the
// value / slope targets on the moving boundary, all functions of t.
struct GeneralBoundaryData {
  std::function<double(double)> gamma11, gamma12, g1, g2, g3;
};

// gamma11 = gamma12 = 1, g1 = 0, g2 = 1, g3 = 0.
GeneralBoundaryData russian_boundary_data();

struct ResidualBreakdown {
  double F = 0.0;  // I1^2 + I2^2 + I3^2
  double I1 = 0.0, I2 = 0.0, I3 = 0.0;
};

// Discrepancy of u_N(y,t) = sum a_n E_n(y) exp(-omega_n^2 t) against the
// boundary data: I1 at y = 0, I2 (value) and I3 (slope) on the moving
// boundary, each a discrete norm over the time grid.
ResidualBreakdown residual_F(const BasisFamily& basis,
                             const std::vector<double>& a,
                             const BoundaryModel& boundary,
                             const TimeGrid& grid,
                             const GeneralBoundaryData& data);

// Assembles the stacked weighted collocation system (value block, slope
// block) for the boundary and solves it by the ridge sweep.
InnerSolution solve_inner_ls(const BasisFamily& basis,
                             const BoundaryModel& boundary,
                             const TimeGrid& grid,
                             const GeneralBoundaryData& data,
                             const std::vector<double>& lambda_grid,
                             double coeff_cap = 1e4);

struct SolveResult {
  std::vector<double> a_coeffs;
  std::vector<double> b_coeffs;
  double I1 = 0.0, I2 = 0.0, I3 = 0.0;
  double F = 0.0;
  double lambda = 0.0;
  long eval_count = 0;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
  bool converged = false;
};

struct OuterOptions {
  double L = 0.0;             // right end of the spatial domain
  long budget = 5000;         // main-phase evaluation budget
  double diameter_tol = 1e-8;
  double initial_step = 0.0;  // simplex step; 0 picks 0.1 * max|b_init|
  double penalty = 1e6;
  std::size_t check_points = 1000;
  std::vector<double> lambda_grid;  // empty selects the default grid
  double coeff_cap = 1e4;
  std::uint64_t seed = 0;  // recorded in the result
  // Called on every new feasible best (evaluation count, sqrt F).
  std::function<void(long, double)> progress;
};

// Minimizes sqrt(F) over the boundary coefficients with the downhill
// simplex, constraints (0 < s_K <= L, s_K' >= 0, s_K'' <= 0) enforced on a
// dense check grid through a penalty, then restarts once from the best point
// with a tenfold smaller simplex (budget/2 extra evaluations). Throws
// InfeasibleStart when b_init violates the constraints. A run that ends on
// the evaluation budget instead of the diameter tolerance comes back with
// converged = false.
SolveResult minimize_free_boundary(const BasisFamily& basis,
                                   const TimeGrid& grid,
                                   const GeneralBoundaryData& data,
                                   const std::vector<double>& b_init,
                                   const OuterOptions& opts);

}  // namespace fbp
