#pragma once

#include <functional>
#include <vector>

namespace fbp {

struct NelderMeadOptions {
  long max_evals = 5000;
  double diameter_tol = 1e-8;
  // Per-coordinate offset of the initial simplex. Every coordinate gets the
  // same full-size step; tiny perturbations on zero coordinates leave the
  // simplex nearly degenerate and stall the search.
  double initial_step = 0.05;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  long evals = 0;
  bool converged = false;  // true when the simplex diameter met the tolerance
};

// Downhill simplex minimization (reflection 1, expansion 2, contraction 1/2,
// shrink 1/2). Stops when the simplex diameter (max coordinate spread against
// the best vertex) falls under diameter_tol, or on the evaluation budget.
NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& fn,
    const std::vector<double>& x0, const NelderMeadOptions& opts);

}  // namespace fbp
