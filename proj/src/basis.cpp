#include "fbp/basis.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fbp/errors.hpp"

namespace fbp {

namespace {

// Uniform draw on [0, 1) with the full 53-bit mantissa, so the sequence is
// identical on every platform for a given seed.
double uniform53(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// 4-point Lagrange interpolation of a uniformly sampled row at x = y / h.
double lagrange4(const std::vector<double>& row, double h, double y) {
  const std::size_t n1 = row.size();
  if (n1 < 4) throw MeshMismatch("interpolation needs at least 4 mesh points");
  const double pos = y / h;
  long j = static_cast<long>(std::floor(pos)) - 1;
  j = std::clamp(j, 0L, static_cast<long>(n1) - 4);
  const double s = pos - static_cast<double>(j);  // in [0, 3] near the center
  const double w0 = -(s - 1.0) * (s - 2.0) * (s - 3.0) / 6.0;
  const double w1 = s * (s - 2.0) * (s - 3.0) / 2.0;
  const double w2 = -s * (s - 1.0) * (s - 3.0) / 2.0;
  const double w3 = s * (s - 1.0) * (s - 2.0) / 6.0;
  const std::size_t uj = static_cast<std::size_t>(j);
  return w0 * row[uj] + w1 * row[uj + 1] + w2 * row[uj + 2] + w3 * row[uj + 3];
}

}  // namespace

std::vector<double> generate_frequencies(double d, double delta, double cap,
                                         double T, std::uint64_t seed) {
  if (d < 0.0 || delta < 0.0)
    throw Error("frequency step parameters must be nonnegative");
  if (d + delta == 0.0)
    throw DegenerateStep("frequency step d + delta must be positive");
  if (T <= 0.0) throw Error("horizon must be positive");
  if (cap <= 0.0) throw Error("frequency cap must be positive");

  std::mt19937_64 rng(seed);
  std::vector<double> omegas{0.0};
  // The slack keeps the deterministic delta = 0 sequence from dropping its
  // last member to accumulated rounding (e.g. 200 * 0.1 vs cap = 20).
  const double bound = cap * (1.0 + 1e-12);
  for (;;) {
    const double next = omegas.back() + d + delta * uniform53(rng);
    if (next * T > bound) break;
    if (omegas.size() > 20'000'000)
      throw Error("frequency family too large; check d, delta, cap, T");
    omegas.push_back(next);
  }
  return omegas;
}

BasisFamily build_reduced_basis(const CoefficientGrid& grid,
                                const NsbfTable& nsbf,
                                const std::vector<double>& omegas,
                                std::uint64_t seed) {
  if (omegas.empty() || omegas.front() != 0.0)
    throw Error("frequency family must start at omega = 0");
  for (std::size_t n = 1; n < omegas.size(); ++n)
    if (omegas[n] <= omegas[n - 1])
      throw Error("frequency family must be strictly ascending");

  const std::size_t n1 = grid.size();
  BasisFamily fam;
  fam.omegas = omegas;
  fam.M = nsbf.M;
  fam.seed = seed;
  fam.y_max = grid.mesh.back();
  fam.betas.resize(omegas.size());
  fam.e_tilde.reserve(omegas.size());
  fam.e_tilde_prime.reserve(omegas.size());
  fam.e_spline.reserve(omegas.size());
  fam.e_prime_spline.reserve(omegas.size());

  std::vector<double> c, s, cp, sp;
  for (std::size_t n = 0; n < omegas.size(); ++n) {
    // For omega = 0 this yields the pair (f, Phi_1), whose mix satisfies the
    // same Robin condition; the formula below covers both cases.
    eval_cs_all(grid, nsbf, omegas[n], c, s, cp, sp);
    if (sp[0] == 0.0)
      throw ZeroDerivativeAtOrigin(
          "s'(omega, 0) vanished while mixing the reduced basis");
    const double beta = -(c[0] + cp[0]) / sp[0];
    fam.betas[n] = beta;
    std::vector<double> e(n1), ep(n1);
    for (std::size_t i = 0; i < n1; ++i) {
      e[i] = c[i] + beta * s[i];
      ep[i] = cp[i] + beta * sp[i];
    }
    fam.e_spline.emplace_back(0.0, grid.h, e);
    fam.e_prime_spline.emplace_back(0.0, grid.h, ep);
    fam.e_tilde.push_back(std::move(e));
    fam.e_tilde_prime.push_back(std::move(ep));
  }
  return fam;
}

double eval_solution(const BasisFamily& basis, const std::vector<double>& a,
                     double y, double t, SolutionPart which) {
  if (a.size() != basis.size())
    throw LengthMismatch("coefficient count does not match basis size");
  if (y < 0.0 || y > basis.y_max * (1.0 + 1e-12))
    throw OutOfDomain("y outside the basis mesh");
  if (t < 0.0) throw OutOfDomain("negative time");

  double acc = 0.0;
  for (std::size_t n = 0; n < basis.size(); ++n) {
    if (a[n] == 0.0) continue;
    const double om = basis.omegas[n];
    double term;
    switch (which) {
      case SolutionPart::u:
        term = basis.e_spline[n].value(y);
        break;
      case SolutionPart::u_y:
        term = basis.e_prime_spline[n].value(y);
        break;
      default:
        term = -om * om * basis.e_spline[n].value(y);
        break;
    }
    acc += a[n] * term * std::exp(-om * om * t);
  }
  return acc;
}

double transmuted_heat_polynomial(const FormalPowerTable& powers, int n,
                                  double y, double t) {
  if (n < 0) throw Error("degree must be nonnegative");
  if (n > powers.K_max)
    throw DegreeTooLarge("degree exceeds the formal-power table");
  if (powers.h <= 0.0) throw MeshMismatch("table carries no mesh spacing");
  const double y_top =
      powers.h * static_cast<double>(powers.phi.at(0).size() - 1);
  if (y < 0.0 || y > y_top * (1.0 + 1e-12))
    throw OutOfDomain("y outside the table mesh");

  // c_k = n! / ((n - 2k)! k!), built incrementally.
  double acc = 0.0;
  double coef = 1.0;
  double tk = 1.0;
  for (int k = 0; 2 * k <= n; ++k) {
    const int m = n - 2 * k;
    acc += coef * tk *
           lagrange4(powers.phi[static_cast<std::size_t>(m)], powers.h, y);
    coef *= static_cast<double>(m) * static_cast<double>(m - 1) /
            static_cast<double>(k + 1);
    tk *= t;
  }
  return acc;
}

}  // namespace fbp
