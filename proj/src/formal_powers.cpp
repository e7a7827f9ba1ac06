#include <complex>
#include <utility>
#include <vector>

#include "fbp/errors.hpp"
#include "fbp/grid.hpp"
#include "fbp/quadrature.hpp"

namespace fbp {

namespace {

// Cumulative integral over a complex array, reusing the real rule per part.
std::vector<std::complex<double>> cumulative_integral_c(
    const std::vector<std::complex<double>>& v, double h) {
  const std::size_t n = v.size();
  std::vector<double> re(n), im(n);
  for (std::size_t j = 0; j < n; ++j) {
    re[j] = v[j].real();
    im[j] = v[j].imag();
  }
  std::vector<double> cre = cumulative_integral(re, h);
  std::vector<double> cim = cumulative_integral(im, h);
  std::vector<std::complex<double>> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = {cre[j], cim[j]};
  return out;
}

std::vector<double> cumulative_integral_t(const std::vector<double>& v, double h) {
  return cumulative_integral(v, h);
}
std::vector<std::complex<double>> cumulative_integral_t(
    const std::vector<std::complex<double>>& v, double h) {
  return cumulative_integral_c(v, h);
}

template <typename T>
struct PowerArrays {
  std::vector<std::vector<T>> phi, psi, y_fun, y_tilde;
};

// Definition of the formal powers: Y and Y-tilde alternate between the
// weights 1/(f^2 p) and f^2 w, with opposite parities, and the powers are
// Phi_k = f * (k odd ? Y_k : Ytilde_k), Psi_k = (k odd ? Ytilde_k : Y_k) / f.
template <typename T>
PowerArrays<T> run_recursion(const CoefficientGrid& g, const std::vector<T>& f, int k_max) {
  const std::size_t n = g.size();
  PowerArrays<T> out;
  out.phi.assign(k_max + 1, std::vector<T>(n));
  out.psi.assign(k_max + 1, std::vector<T>(n));
  out.y_fun.assign(k_max + 1, std::vector<T>(n, T(1)));
  out.y_tilde.assign(k_max + 1, std::vector<T>(n, T(1)));

  std::vector<T> inv_f2p(n), f2w(n);
  for (std::size_t j = 0; j < n; ++j) {
    const T f2 = f[j] * f[j];
    inv_f2p[j] = T(1) / (f2 * g.p[j]);
    f2w[j] = f2 * g.w[j];
  }

  std::vector<T> work(n);
  for (int k = 1; k <= k_max; ++k) {
    const bool odd = (k % 2 == 1);
    const std::vector<T>& wy = odd ? inv_f2p : f2w;
    const std::vector<T>& wyt = odd ? f2w : inv_f2p;
    for (std::size_t j = 0; j < n; ++j) work[j] = out.y_fun[k - 1][j] * wy[j];
    out.y_fun[k] = cumulative_integral_t(work, g.h);
    for (std::size_t j = 0; j < n; ++j) out.y_fun[k][j] *= double(k);
    for (std::size_t j = 0; j < n; ++j) work[j] = out.y_tilde[k - 1][j] * wyt[j];
    out.y_tilde[k] = cumulative_integral_t(work, g.h);
    for (std::size_t j = 0; j < n; ++j) out.y_tilde[k][j] *= double(k);
  }
  for (int k = 0; k <= k_max; ++k) {
    const bool odd = (k % 2 == 1);
    const std::vector<T>& base_phi = odd ? out.y_fun[k] : out.y_tilde[k];
    const std::vector<T>& base_psi = odd ? out.y_tilde[k] : out.y_fun[k];
    for (std::size_t j = 0; j < n; ++j) {
      out.phi[k][j] = f[j] * base_phi[j];
      out.psi[k][j] = base_psi[j] / f[j];
    }
  }
  return out;
}

}  // namespace

FormalPowerTable compute_formal_powers(const CoefficientGrid& grid, int K_max) {
  if (K_max < 1) {
    throw Error("compute_formal_powers: K_max must be at least 1");
  }
  const std::size_t n = grid.size();
  FormalPowerTable table;
  table.K_max = K_max;
  table.h = grid.h;
  if (!grid.is_complex()) {
    PowerArrays<double> arr = run_recursion<double>(grid, grid.f, K_max);
    table.phi = std::move(arr.phi);
    table.psi = std::move(arr.psi);
    table.y_fun = std::move(arr.y_fun);
    table.y_tilde_fun = std::move(arr.y_tilde);
    return table;
  }
  using C = std::complex<double>;
  std::vector<C> f(n);
  for (std::size_t j = 0; j < n; ++j) f[j] = {grid.f[j], grid.f_imag[j]};
  PowerArrays<C> arr = run_recursion<C>(grid, f, K_max);
  auto split = [n](const std::vector<std::vector<C>>& src,
                   std::vector<std::vector<double>>& re,
                   std::vector<std::vector<double>>& im) {
    re.assign(src.size(), std::vector<double>(n));
    im.assign(src.size(), std::vector<double>(n));
    for (std::size_t k = 0; k < src.size(); ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        re[k][j] = src[k][j].real();
        im[k][j] = src[k][j].imag();
      }
    }
  };
  split(arr.phi, table.phi, table.phi_imag);
  split(arr.psi, table.psi, table.psi_imag);
  // The auxiliary integrals are kept as their real parts for inspection; the
  // complex path is a fallback for grid construction, not a production basis.
  table.y_fun.assign(K_max + 1, std::vector<double>(n));
  table.y_tilde_fun.assign(K_max + 1, std::vector<double>(n));
  for (int k = 0; k <= K_max; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      table.y_fun[k][j] = arr.y_fun[k][j].real();
      table.y_tilde_fun[k][j] = arr.y_tilde[k][j].real();
    }
  }
  return table;
}

}  // namespace fbp
