#include "fbp/nsbf.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fbp/bessel.hpp"
#include "fbp/errors.hpp"
#include "fbp/quadrature.hpp"

namespace fbp {

namespace {

[[maybe_unused]] double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Coefficients of the Legendre polynomial P_m in the monomial basis,
// via (m+1) P_{m+1} = (2m+1) x P_m - m P_{m-1}. coef[k] multiplies x^k.
std::vector<double> legendre_coefficients(int m) {
  std::vector<double> pm1{1.0};
  if (m == 0) return pm1;
  std::vector<double> pm{0.0, 1.0};
  for (int n = 1; n < m; ++n) {
    std::vector<double> nxt(static_cast<std::size_t>(n) + 2, 0.0);
    for (int k = 0; k <= n; ++k)
      nxt[static_cast<std::size_t>(k) + 1] +=
          (2.0 * n + 1.0) / (n + 1.0) * pm[static_cast<std::size_t>(k)];
    for (int k = 0; k < n; ++k)
      nxt[static_cast<std::size_t>(k)] -=
          static_cast<double>(n) / (n + 1.0) * pm1[static_cast<std::size_t>(k)];
    pm1 = std::move(pm);
    pm = std::move(nxt);
  }
  return pm;
}

}  // namespace

// The recurrence below runs in the arc-length variable x = l(y), where the
// equation takes the normalized form U'' - Q U = omega^2 U with solution
// F = rho * f pulled back to the y mesh. Writing the degree-n coefficient
// polynomials as s_n (value side) and r_n (derivative side), their first
// derivatives satisfy
//
//   s_n' = (F'/F) s_n + x^{n-1} u_n,   r_n' = -(F'/F) r_n + x^{n-1} v_n,
//
// and the Legendre derivative identity advances u_n, v_n two orders at a
// time. Subtracting the free-problem leading parts, a_n = s_n - x^n and
// b_n = r_n - x^n stay bounded and everything reduces to the five coupled
// updates coded in the loop, with one cumulative integral per order for a_n
// and one for b_n. A_n = (2n+1)/2 a_n / rho, and B_n collects the derivative
// side plus the boundary terms of the integrated parts.
NsbfTable compute_nsbf_coefficients(const CoefficientGrid& grid,
                                    const FormalPowerTable& powers, int M) {
  if (grid.is_complex())
    throw InvalidState("NSBF tables require a real-valued particular solution");
  if (M < 2) throw Error("series order must be at least 2");
  if (powers.K_max < 1)
    throw Error("formal-power table must contain Phi_1 and Psi_1");

  const std::size_t n1 = grid.size();
  if (powers.phi.size() < 2 || powers.phi[1].size() != n1)
    throw MeshMismatch("formal-power table does not match the mesh");

  const std::vector<double>& x = grid.l;
  std::vector<double> sqrt_wp(n1), F(n1), Fp_over_F(n1);
  for (std::size_t i = 0; i < n1; ++i) {
    sqrt_wp[i] = std::sqrt(grid.w[i] / grid.p[i]);
    F[i] = grid.rho[i] * grid.f[i];
    const double dF =
        (grid.rho_prime[i] * grid.f[i] + grid.rho[i] * grid.f_prime[i]) /
        sqrt_wp[i];
    Fp_over_F[i] = dF / F[i];
  }

  // Cumulative integral in x, carried out on the y mesh.
  auto arc_integral = [&](const std::vector<double>& vals) {
    std::vector<double> tmp(n1);
    for (std::size_t i = 0; i < n1; ++i) tmp[i] = vals[i] * sqrt_wp[i];
    return cumulative_integral(tmp, grid.h);
  };

  NsbfTable tab;
  tab.M = M;
  const std::size_t rows = static_cast<std::size_t>(M) + 1;
  tab.A.assign(rows, std::vector<double>(n1));
  tab.B.assign(rows, std::vector<double>(n1));

  // Rolling two-order state of the difference recurrence.
  std::vector<double> a_m2, a_m1, b_m2, b_m1, gg_m2, gg_m1, e2_m2, e2_m1,
      v2_m2, v2_m1;
  std::vector<double> a(n1), b(n1), gg(n1), e2(n1), v2(n1), xn(n1, 1.0);
  std::vector<double> work(n1);

  for (int n = 0; n <= M; ++n) {
    if (n == 0) {
      for (std::size_t i = 0; i < n1; ++i) {
        a[i] = F[i] - 1.0;
        b[i] = 1.0 / F[i] - 1.0;
        gg[i] = 0.0;
        e2[i] = 0.0;
        v2[i] = 0.0;
      }
    } else if (n == 1) {
      for (std::size_t i = 0; i < n1; ++i) {
        a[i] = grid.rho[i] * powers.phi[1][i] - x[i];
        b[i] = powers.psi[1][i] / grid.rho[i] - x[i];
        gg[i] = 1.0 / F[i] - 1.0;
        e2[i] = 0.0;
        v2[i] = F[i] - 1.0;
        xn[i] = x[i];
      }
    } else {
      const double c1 = 2.0 * n - 1.0;
      const double c2 = 2.0 * n - 3.0;
      for (std::size_t i = 0; i < n1; ++i) {
        const double xx = x[i] * x[i];
        gg[i] = xx * gg_m2[i] + c1 * b_m1[i];
        e2[i] = xx * e2_m2[i] + c2 * x[i] * a_m2[i];
        v2[i] = xx * v2_m2[i] + c1 * a_m1[i] - c2 * x[i] * b_m2[i];
      }
      // xn still holds x^{n-1} here; both integrands need it.
      for (std::size_t i = 0; i < n1; ++i)
        work[i] = (gg[i] - e2[i] + n * xn[i] * (1.0 - F[i])) / F[i];
      const std::vector<double> ia = arc_integral(work);
      for (std::size_t i = 0; i < n1; ++i)
        work[i] = v2[i] * F[i] + n * xn[i] * (F[i] - 1.0);
      const std::vector<double> ib = arc_integral(work);
      for (std::size_t i = 0; i < n1; ++i) {
        xn[i] *= x[i];
        a[i] = (F[i] - 1.0) * xn[i] + F[i] * ia[i];
        b[i] = (1.0 / F[i] - 1.0) * xn[i] + ib[i] / F[i];
      }
    }

    const double scale = 0.5 * (2.0 * n + 1.0);
    const double parity = (n % 2 == 0) ? grid.h_tilde : 0.0;
    for (std::size_t i = 0; i < n1; ++i) {
      tab.A[static_cast<std::size_t>(n)][i] = scale * a[i] / grid.rho[i];
      tab.B[static_cast<std::size_t>(n)][i] =
          scale *
          (Fp_over_F[i] * a[i] + gg[i] +
           (Fp_over_F[i] - grid.G2[i] - parity) * xn[i]) /
          grid.rho[i];
    }

    a_m2 = std::move(a_m1);
    a_m1 = a;
    b_m2 = std::move(b_m1);
    b_m1 = b;
    gg_m2 = std::move(gg_m1);
    gg_m1 = gg;
    e2_m2 = std::move(e2_m1);
    e2_m1 = e2;
    v2_m2 = std::move(v2_m1);
    v2_m1 = v2;
  }

  // Normalized coefficients alpha_n = A_n / l^n, mu_n = B_n / l^n. Mesh
  // points with l below the threshold (in practice only the origin itself)
  // get zeros; evaluation substitutes the exact limits at y = 0 anyway.
  tab.alpha.assign(rows, std::vector<double>(n1));
  tab.mu.assign(rows, std::vector<double>(n1));
  tab.alpha[0] = tab.A[0];
  tab.mu[0] = tab.B[0];
  const double tiny_l = 1e-6 * grid.b_arc;
  std::vector<bool> guarded(n1, false);
  for (std::size_t i = 0; i < n1; ++i) guarded[i] = x[i] < tiny_l;
  std::vector<double> lpow(n1, 1.0);
  for (int n = 1; n <= M; ++n) {
    const std::size_t un = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < n1; ++i) {
      if (!guarded[i]) {
        lpow[i] = (n == 1) ? x[i] : lpow[i] * x[i];
        if (lpow[i] < 1e-280) guarded[i] = true;  // l^n about to underflow
      }
      if (guarded[i]) {
        tab.alpha[un][i] = 0.0;
        tab.mu[un][i] = 0.0;
      } else {
        tab.alpha[un][i] = tab.A[un][i] / lpow[i];
        tab.mu[un][i] = tab.B[un][i] / lpow[i];
      }
    }
  }

  // Growth of the normalized tables signals that the mesh cannot support the
  // requested order. The check stays away from the origin, where A_n / l^n
  // is roundoff divided by a vanishing power and legitimately enormous (the
  // evaluation pairs it with j_n(omega l), which vanishes even faster); real
  // instability compounds through the cumulative integrals and shows up in
  // the outer half of the mesh. The floor keeps the threshold meaningful
  // when the leading coefficients are identically zero, as in the free
  // problem.
  std::size_t i_far = 0;
  while (i_far < n1 && x[i_far] < 0.5 * grid.b_arc) ++i_far;
  auto far_max = [&](const std::vector<double>& v) {
    double m = 0.0;
    for (std::size_t i = i_far; i < n1; ++i) m = std::max(m, std::abs(v[i]));
    return m;
  };
  const double thr =
      1e12 * std::max({1.0, far_max(tab.alpha[0]), far_max(tab.mu[0])});
  for (int n = 1; n <= M; ++n) {
    const std::size_t un = static_cast<std::size_t>(n);
    if (far_max(tab.alpha[un]) > thr || far_max(tab.mu[un]) > thr)
      throw NumericalBlowup("normalized coefficient tables blow up at order " +
                            std::to_string(n) +
                            "; refine the mesh or lower M");
  }

  tab.phi1 = powers.phi[1];
  tab.phi1_prime.resize(n1);
  for (std::size_t i = 0; i < n1; ++i)
    tab.phi1_prime[i] = grid.f_prime[i] / grid.f[i] * powers.phi[1][i] +
                        1.0 / (grid.f[i] * grid.p[i]);
  return tab;
}

std::pair<double, double> alpha_mu_direct(const CoefficientGrid& grid,
                                          const FormalPowerTable& powers, int m,
                                          std::size_t y_index) {
  if (grid.is_complex())
    throw InvalidState("direct sums require a real-valued particular solution");
  if (m < 0) throw Error("order must be nonnegative");
  if (m > 10)
    throw OrderTooLarge(
        "direct Legendre sums lose their precision past order 10");
  if (powers.K_max < m)
    throw Error("formal-power table too short for the requested order");
  if (y_index == 0 || y_index >= grid.size())
    throw OutOfDomain("y_index must be an interior or right-end mesh index");

  const std::vector<double> coef = legendre_coefficients(m);
  const double l = grid.l[y_index];
  const double rho = grid.rho[y_index];
  const double fac = rho * std::sqrt(grid.p[y_index] / grid.w[y_index]) *
                     (grid.f_prime[y_index] / grid.f[y_index] +
                      grid.rho_prime[y_index] / rho);

  double ssum = 0.0, msum = 0.0, lk = 1.0;
  for (int k = 0; k <= m; ++k) {
    const double c = coef[static_cast<std::size_t>(k)];
    if (c != 0.0) {
      const double phik = powers.phi[static_cast<std::size_t>(k)][y_index];
      ssum += c * phik / lk;
      double term = fac * phik;
      if (k >= 1)
        term += k * powers.psi[static_cast<std::size_t>(k) - 1][y_index] / rho;
      msum += c * term / lk;
    }
    lk *= l;
  }

  const double alpha = 0.5 * (2.0 * m + 1.0) * (ssum - 1.0 / rho);
  const double parity = (m % 2 == 0) ? grid.h_tilde : 0.0;
  const double mu =
      (2.0 * m + 1.0) / (2.0 * rho) *
      (msum - m * (m + 1.0) / (2.0 * l) - grid.G2[y_index] - parity);
  return {alpha, mu};
}

void eval_cs_all(const CoefficientGrid& grid, const NsbfTable& nsbf,
                 double omega, std::vector<double>& c, std::vector<double>& s,
                 std::vector<double>& c_prime, std::vector<double>& s_prime) {
  if (omega < 0.0) throw NegativeFrequency("omega must be nonnegative");
  const std::size_t n1 = grid.size();
  if (nsbf.alpha.empty() || nsbf.alpha[0].size() != n1)
    throw MeshMismatch("coefficient tables do not match the mesh");

  c.resize(n1);
  s.resize(n1);
  c_prime.resize(n1);
  s_prime.resize(n1);

  if (omega == 0.0) {
    // Degenerate pair: f solves the equation at omega = 0 with the same
    // initial data as c, and Phi_1 plays the role of the second solution.
    c = grid.f;
    c_prime = grid.f_prime;
    s = nsbf.phi1;
    s_prime = nsbf.phi1_prime;
    return;
  }

  const int M = nsbf.M;
  std::vector<double> jn(static_cast<std::size_t>(M) + 1);
  for (std::size_t i = 0; i < n1; ++i) {
    const double xx = omega * grid.l[i];
    spherical_bessel_j_all(M, xx, jn.data());
    const double cosx = std::cos(xx);
    const double sinx = std::sin(xx);
    const double rho = grid.rho[i];
    double cv = cosx / rho;
    double sv = sinx / rho;
    double cd = (grid.G1[i] * cosx - omega * sinx) / rho;
    double sd = (grid.G2[i] * sinx + omega * cosx) / rho;
    for (int n = 0; n <= M; ++n) {
      const std::size_t un = static_cast<std::size_t>(n);
      const double sgn = ((n / 2) % 2 == 0) ? 2.0 : -2.0;
      const double ta = sgn * nsbf.alpha[un][i] * jn[un];
      const double tm = sgn * nsbf.mu[un][i] * jn[un];
      if (n % 2 == 0) {
        cv += ta;
        cd += tm;
      } else {
        sv += ta;
        sd += tm;
      }
    }
    const double sq = std::sqrt(grid.w[i] / grid.p[i]);
    const double rr = grid.rho_prime[i] / rho;
    c[i] = cv;
    s[i] = sv;
    c_prime[i] = sq * cd - rr * cv;
    s_prime[i] = sq * sd - rr * sv;
  }

  // Exact values at the origin.
  c[0] = 1.0 / grid.rho[0];
  s[0] = 0.0;
  c_prime[0] = grid.f_prime[0];
  s_prime[0] = omega / grid.rho[0] * std::sqrt(grid.w[0] / grid.p[0]);
}

std::vector<double> eval_cs(const CoefficientGrid& grid, const NsbfTable& nsbf,
                            double omega, CsKind which) {
  std::vector<double> c, s, cp, sp;
  eval_cs_all(grid, nsbf, omega, c, s, cp, sp);
  switch (which) {
    case CsKind::c:
      return c;
    case CsKind::s:
      return s;
    case CsKind::c_prime:
      return cp;
    default:
      return sp;
  }
}

}  // namespace fbp
