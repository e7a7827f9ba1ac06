#include "fbp/grid.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

#include "fbp/errors.hpp"
#include "fbp/quadrature.hpp"

namespace fbp {

namespace {

// RK4 for the first-order system (f, g) with g = p f', f' = g/p, g' = q f.
// Integrates on the given mesh with `substeps` stages per interval and
// returns f and f' = g/p sampled at the mesh nodes.
template <typename T>
std::pair<std::vector<T>, std::vector<T>> integrate_particular_solution(
    const CoefficientFn& p_fn, const CoefficientFn& q_fn, const std::vector<double>& mesh,
    T f0, T fp0, int substeps) {
  const std::size_t n = mesh.size();
  std::vector<T> f(n), fp(n);
  T fc = f0;
  T gc = T(p_fn(mesh[0])) * fp0;
  f[0] = f0;
  fp[0] = fp0;
  for (std::size_t j = 1; j < n; ++j) {
    const double step = (mesh[j] - mesh[j - 1]) / substeps;
    double y = mesh[j - 1];
    for (int s = 0; s < substeps; ++s) {
      const double ph = p_fn(y + 0.5 * step);
      const double qh = q_fn(y + 0.5 * step);
      const double p1 = p_fn(y + step);
      const double q1 = q_fn(y + step);
      const double p0 = p_fn(y);
      const double q0 = q_fn(y);
      const T k1f = gc / p0;
      const T k1g = q0 * fc;
      const T k2f = (gc + 0.5 * step * k1g) / ph;
      const T k2g = qh * (fc + 0.5 * step * k1f);
      const T k3f = (gc + 0.5 * step * k2g) / ph;
      const T k3g = qh * (fc + 0.5 * step * k2f);
      const T k4f = (gc + step * k3g) / p1;
      const T k4g = q1 * (fc + step * k3f);
      fc += step / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
      gc += step / 6.0 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g);
      y += step;
    }
    f[j] = fc;
    fp[j] = gc / p_fn(mesh[j]);
  }
  return {std::move(f), std::move(fp)};
}

template <typename T>
double max_abs(const std::vector<T>& v) {
  double m = 0.0;
  for (const T& x : v) m = std::max(m, std::abs(x));
  return m;
}

// Everything in the grid except f itself.
CoefficientGrid build_frame(const CoefficientFn& p_fn, const CoefficientFn& q_fn,
                            const CoefficientFn& w_fn, double L, int n_mesh) {
  if (n_mesh < 100) {
    throw Error("build_coefficient_grid: N_mesh must be at least 100");
  }
  if (!(L > 0.0)) {
    throw Error("build_coefficient_grid: L must be positive");
  }
  CoefficientGrid g;
  const std::size_t n = static_cast<std::size_t>(n_mesh) + 1;
  g.h = L / n_mesh;
  g.mesh.resize(n);
  g.p.resize(n);
  g.q.resize(n);
  g.w.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double y = (j == n - 1) ? L : j * g.h;
    g.mesh[j] = y;
    g.p[j] = p_fn(y);
    g.q[j] = q_fn(y);
    g.w[j] = w_fn(y);
    if (!(g.p[j] > 0.0) || !(g.w[j] > 0.0)) {
      throw NonPositiveCoefficient("p and w must be strictly positive on [0, L]");
    }
  }
  g.rho.resize(n);
  std::vector<double> sqrt_w_over_p(n);
  for (std::size_t j = 0; j < n; ++j) {
    g.rho[j] = std::pow(g.p[j] * g.w[j], 0.25);
    sqrt_w_over_p[j] = std::sqrt(g.w[j] / g.p[j]);
  }
  g.l = fbp::cumulative_integral(sqrt_w_over_p, g.h);
  g.b_arc = g.l.back();
  // rho' by central differences, second-order one-sided at the ends.
  g.rho_prime.resize(n);
  const double inv2h = 0.5 / g.h;
  g.rho_prime[0] = (-3.0 * g.rho[0] + 4.0 * g.rho[1] - g.rho[2]) * inv2h;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    g.rho_prime[j] = (g.rho[j + 1] - g.rho[j - 1]) * inv2h;
  }
  g.rho_prime[n - 1] = (3.0 * g.rho[n - 1] - 4.0 * g.rho[n - 2] + g.rho[n - 3]) * inv2h;
  return g;
}

void finish_scalars(CoefficientGrid& g, double f_prime_0_over_f0) {
  const std::size_t n = g.size();
  // h_tilde depends only on the initial data of f and on rho at the origin.
  g.h_tilde = std::sqrt(g.p[0] / g.w[0]) * (f_prime_0_over_f0 + g.rho_prime[0] / g.rho[0]);
  std::vector<double> integrand(n);
  for (std::size_t j = 0; j < n; ++j) {
    integrand[j] = g.q[j] / (g.rho[j] * g.rho[j]) + g.rho_prime[j] * g.rho_prime[j] / g.w[j];
  }
  std::vector<double> acc = fbp::cumulative_integral(integrand, g.h);
  g.G2.resize(n);
  g.G1.resize(n);
  const double edge0 = g.rho[0] * g.rho_prime[0] / (2.0 * g.w[0]);
  for (std::size_t j = 0; j < n; ++j) {
    g.G2[j] = g.rho[j] * g.rho_prime[j] / (2.0 * g.w[j]) - edge0 + 0.5 * acc[j];
    g.G1[j] = g.G2[j] + g.h_tilde;
  }
}

}  // namespace

CoefficientGrid build_coefficient_grid(const CoefficientFn& p_fn, const CoefficientFn& q_fn,
                                       const CoefficientFn& w_fn, double L, int n_mesh,
                                       double f_prime_0) {
  CoefficientGrid g = build_frame(p_fn, q_fn, w_fn, L, n_mesh);
  const double f0 = 1.0 / g.rho[0];
  auto [f, fp] = integrate_particular_solution<double>(p_fn, q_fn, g.mesh, f0, f_prime_0, 2);
  auto [f1, fp1] = integrate_particular_solution<double>(p_fn, q_fn, g.mesh, f0, f_prime_0, 1);
  (void)fp1;
  const double scale = max_abs(f);
  double check = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    check = std::max(check, std::abs(f[j] - f1[j]) / scale);
    if (std::abs(f[j]) < 1e-12 * scale) {
      throw VanishingSolution(
          "particular solution vanishes on the mesh; retry with the complex combination "
          "f = f1 + i*f2 (build_coefficient_grid_complex)");
    }
  }
  g.f = std::move(f);
  g.f_prime = std::move(fp);
  g.f_step_check = check;
  finish_scalars(g, f_prime_0 / f0);
  return g;
}

CoefficientGrid build_coefficient_grid_complex(const CoefficientFn& p_fn,
                                               const CoefficientFn& q_fn,
                                               const CoefficientFn& w_fn, double L,
                                               int n_mesh) {
  using C = std::complex<double>;
  CoefficientGrid g = build_frame(p_fn, q_fn, w_fn, L, n_mesh);
  const double f0 = 1.0 / g.rho[0];
  auto [f, fp] =
      integrate_particular_solution<C>(p_fn, q_fn, g.mesh, C(f0, 0.0), C(0.0, 1.0), 2);
  auto [f1, fp1] =
      integrate_particular_solution<C>(p_fn, q_fn, g.mesh, C(f0, 0.0), C(0.0, 1.0), 1);
  (void)fp1;
  const std::size_t n = g.size();
  const double scale = max_abs(f);
  double check = 0.0;
  g.f.resize(n);
  g.f_imag.resize(n);
  g.f_prime.resize(n);
  g.f_prime_imag.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    check = std::max(check, std::abs(f[j] - f1[j]) / scale);
    g.f[j] = f[j].real();
    g.f_imag[j] = f[j].imag();
    g.f_prime[j] = fp[j].real();
    g.f_prime_imag[j] = fp[j].imag();
    if (std::abs(f[j]) < 1e-12 * scale) {
      // The Wronskian of the two real solutions keeps |f1 + i*f2| positive;
      // hitting this indicates inconsistent coefficient callables.
      throw VanishingSolution("complex particular solution vanished on the mesh");
    }
  }
  g.f_step_check = check;
  // f'(0)/f(0) = i/f(0) is purely imaginary here, so the real scalar data
  // (h_tilde, G1) see a zero slope contribution.
  finish_scalars(g, 0.0);
  return g;
}

std::vector<double> cumulative_integral(const CoefficientGrid& grid,
                                        const std::vector<double>& values) {
  if (values.size() != grid.size()) {
    throw MeshMismatch("cumulative_integral: array does not match the grid mesh");
  }
  return cumulative_integral(values, grid.h);
}

}  // namespace fbp
