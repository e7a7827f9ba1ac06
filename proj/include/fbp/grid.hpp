#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace fbp {

using CoefficientFn = std::function<double(double)>;

// Mesh data for the operator (1/w)((p u')' - q u) on [0, L]: the Liouville
// transform l(y) = int_0^y sqrt(w/p), the weight rho = (p w)^{1/4}, the
// particular solution f of (p f')' = q f with f(0) = 1/rho(0), and the scalar
// and grid quantities derived from them that the coefficient recurrences use.
//
// When the real particular solution vanishes somewhere, f is rebuilt as the
// complex combination f1 + i*f2 and the imaginary parts are stored in f_imag /
// f_prime_imag (empty arrays mean f is real).
struct CoefficientGrid {
  std::vector<double> mesh;  // y_0 = 0 .. y_N = L, uniform
  double h = 0.0;            // mesh spacing
  std::vector<double> p, q, w;
  std::vector<double> rho, rho_prime;
  std::vector<double> l;  // Liouville transform values, l(0) = 0
  std::vector<double> f, f_prime;
  std::vector<double> f_imag, f_prime_imag;
  double h_tilde = 0.0;
  std::vector<double> G1, G2;
  double b_arc = 0.0;  // l(L)
  // Max relative disagreement between the full-step and half-step ODE
  // integrations of f (Richardson check).
  double f_step_check = 0.0;

  std::size_t size() const { return mesh.size(); }
  bool is_complex() const { return !f_imag.empty(); }
};

// Builds the grid with a real particular solution f, f'(0) = f_prime_0.
// Throws NonPositiveCoefficient if p or w fails to be positive on the mesh,
// VanishingSolution if |f| < 1e-12 * max|f| anywhere (retry with
// build_coefficient_grid_complex in that case).
CoefficientGrid build_coefficient_grid(const CoefficientFn& p_fn, const CoefficientFn& q_fn,
                                       const CoefficientFn& w_fn, double L, int n_mesh,
                                       double f_prime_0 = 0.0);

// Same grid, but f = f1 + i*f2 where f1, f2 solve (p f')' = q f with initial
// data (1/rho(0), 0) and (0, 1); |f| is then bounded away from zero for any
// coefficients satisfying the positivity assumption.
CoefficientGrid build_coefficient_grid_complex(const CoefficientFn& p_fn,
                                               const CoefficientFn& q_fn,
                                               const CoefficientFn& w_fn, double L,
                                               int n_mesh);

// Cumulative integral bound to a grid; throws MeshMismatch when the array
// does not live on the grid's mesh.
std::vector<double> cumulative_integral(const CoefficientGrid& grid,
                                        const std::vector<double>& values);

// Formal powers Phi_k = T[y^k] and the second family Psi_k, together with the
// auxiliary iterated integrals they are built from. Imaginary parts are
// populated only for a complex-f grid.
struct FormalPowerTable {
  int K_max = 0;
  double h = 0.0;  // mesh spacing of the rows, for off-mesh interpolation
  std::vector<std::vector<double>> phi, psi;
  std::vector<std::vector<double>> y_fun, y_tilde_fun;
  std::vector<std::vector<double>> phi_imag, psi_imag;
};

// Alternating iterated integrals: the odd step of Y integrates against
// 1/(f^2 p) and the even step against f^2 w, with the parities swapped for
// Y-tilde. The even-step weight f^2 w is what keeps the family consistent
// with the operator's Liouville form when p != w (the y-mesh pullback of the
// unit-weight Schroedinger recursion); f^2 p in that slot breaks
// C[Phi_2] = 2 Phi_0 for p != w.
FormalPowerTable compute_formal_powers(const CoefficientGrid& grid, int K_max);

}  // namespace fbp
