#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fbp/grid.hpp"
#include "fbp/nsbf.hpp"
#include "fbp/spline.hpp"

namespace fbp {

// Draws the ascending frequency family omega_0 = 0, omega_{n+1} = omega_n +
// d + U(0, delta), stopping once omega * T would exceed cap. The same seed
// always reproduces the same array.
std::vector<double> generate_frequencies(double d, double delta, double cap,
                                         double T, std::uint64_t seed);

// Reduced transmuted-exponential family. Member n is
//   E_n(y) = c(omega_n, y) + beta_n s(omega_n, y),
// with beta_n fixed by the Robin condition E_n(0) + E_n'(0) = 0; the
// omega = 0 member is E_0 = f + beta_0 Phi_1. Values and derivatives are
// sampled over the mesh and carried with natural cubic splines for off-mesh
// evaluation.
struct BasisFamily {
  std::vector<double> omegas;
  std::vector<double> betas;
  std::vector<std::vector<double>> e_tilde, e_tilde_prime;
  std::vector<CubicSpline> e_spline, e_prime_spline;
  int M = 0;
  std::uint64_t seed = 0;
  double y_max = 0.0;

  std::size_t size() const { return omegas.size(); }
};

// The seed is recorded verbatim in the family (it is the one used for the
// omega draw; the construction itself is deterministic).
BasisFamily build_reduced_basis(const CoefficientGrid& grid,
                                const NsbfTable& nsbf,
                                const std::vector<double>& omegas,
                                std::uint64_t seed = 0);

enum class SolutionPart { u, u_y, u_t };

// u_N(y, t) = sum_n a_n E_n(y) exp(-omega_n^2 t), or its y- or t-derivative.
double eval_solution(const BasisFamily& basis, const std::vector<double>& a,
                     double y, double t, SolutionPart which = SolutionPart::u);

// H_n(y, t) = sum_{k <= n/2} n!/((n-2k)! k!) Phi_{n-2k}(y) t^k, the image of
// the classical heat polynomial under the transmutation. Off-mesh y uses
// 4-point Lagrange interpolation of the stored Phi rows.
double transmuted_heat_polynomial(const FormalPowerTable& powers, int n,
                                  double y, double t);

}  // namespace fbp
