#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fbp/grid.hpp"

namespace fbp {

// Coefficient tables for the Bessel-series representation of the solutions
// c(omega, y), s(omega, y) of (p u')' - q u + omega^2 w u = 0:
//
//   c = cos(omega l)/rho + 2 sum_m (-1)^m alpha_{2m}   j_{2m}(omega l)
//   s = sin(omega l)/rho + 2 sum_m (-1)^m alpha_{2m+1} j_{2m+1}(omega l)
//
// with matching mu tables for the derivative representations. A_n = l^n
// alpha_n and B_n = l^n mu_n are what the recurrences actually produce.
struct NsbfTable {
  int M = 0;
  std::vector<std::vector<double>> A, B;
  std::vector<std::vector<double>> alpha, mu;
  // Carried along for the omega = 0 basis member and its derivative.
  std::vector<double> phi1, phi1_prime;
};

// Builds A_n, B_n for n = 0..M by the difference-form recurrence (see the
// implementation notes in nsbf.cpp), then derives alpha_n, mu_n. Throws
// NumericalBlowup when the normalized coefficients grow past 1e12 times the
// leading one, which signals a mesh too coarse for the requested M.
NsbfTable compute_nsbf_coefficients(const CoefficientGrid& grid,
                                    const FormalPowerTable& powers, int M);

// Direct evaluation of (alpha_m, mu_m) at one mesh point from the explicit
// Legendre-coefficient sums. Numerically usable only for m <= 10; serves as
// an independent oracle for the recurrence. y_index must be positive (the
// formulas divide by l(y)).
std::pair<double, double> alpha_mu_direct(const CoefficientGrid& grid,
                                          const FormalPowerTable& powers, int m,
                                          std::size_t y_index);

enum class CsKind { c, s, c_prime, s_prime };

// Evaluates the truncated series for c, s, or their y-derivatives over the
// whole mesh. For omega = 0 returns the degenerate pair: f (for c) and Phi_1
// (for s), with their mesh derivatives.
std::vector<double> eval_cs(const CoefficientGrid& grid, const NsbfTable& nsbf,
                            double omega, CsKind which);

// Same evaluation, all four functions in one pass over the mesh (one Bessel
// table per point instead of four).
void eval_cs_all(const CoefficientGrid& grid, const NsbfTable& nsbf,
                 double omega, std::vector<double>& c, std::vector<double>& s,
                 std::vector<double>& c_prime, std::vector<double>& s_prime);

}  // namespace fbp
