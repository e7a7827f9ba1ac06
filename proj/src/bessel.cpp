#include "fbp/bessel.hpp"

#include <cmath>
#include <vector>

#include "fbp/errors.hpp"

namespace fbp {

namespace {

// Power series around x = 0, adequate (and cancellation-free) for x < 0.35:
// j_n(x) = x^n/(2n+1)!! * sum_k (-x^2/2)^k / (k! (2n+3)(2n+5)...(2n+2k+1)).
double series_jn(int n, double x) {
  double lead = 1.0;  // x^n / (2n+1)!!
  for (int k = 1; k <= n; ++k) lead *= x / (2 * k + 1);
  if (lead == 0.0) return 0.0;  // underflowed below double range
  double term = 1.0;
  double sum = 1.0;
  const double x2h = 0.5 * x * x;
  for (int k = 1; k < 40; ++k) {
    term *= -x2h / (k * (2.0 * n + 2.0 * k + 1.0));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return lead * sum;
}

void fill_small_x(int n_max, double x, double* out) {
  for (int n = 0; n <= n_max; ++n) out[n] = series_jn(n, x);
}

void fill_forward(int n_max, double x, double* out) {
  const double j0 = std::sin(x) / x;
  out[0] = j0;
  if (n_max == 0) return;
  const double j1 = std::sin(x) / (x * x) - std::cos(x) / x;
  out[1] = j1;
  for (int k = 1; k < n_max; ++k) {
    out[k + 1] = (2.0 * k + 1.0) / x * out[k] - out[k - 1];
  }
}

void fill_miller(int n_max, double x, double* out) {
  const int start = n_max + static_cast<int>(std::ceil(std::sqrt(40.0 * n_max))) + 20;
  double jnext = 0.0;   // unnormalized j_{k+1}
  double jcur = 1e-300; // unnormalized j_k, seeded at k = start
  for (int k = start; k >= 1; --k) {
    const double jprev = (2.0 * k + 1.0) / x * jcur - jnext;  // j_{k-1}
    jnext = jcur;
    jcur = jprev;
    if (k - 1 <= n_max) out[k - 1] = jcur;
    if (std::abs(jcur) > 1e250) {
      jnext *= 1e-250;
      jcur *= 1e-250;
      for (int i = std::max(k - 1, 0); i <= n_max; ++i) out[i] *= 1e-250;
    }
  }
  // Normalize against whichever of j_0, j_1 carries the larger magnitude so a
  // near-zero of sin(x) cannot poison the scaling.
  const double j0_true = std::sin(x) / x;
  const double j1_true = std::sin(x) / (x * x) - std::cos(x) / x;
  const double ratio = (n_max == 0 || std::abs(out[0]) >= std::abs(out[1]))
                           ? j0_true / out[0]
                           : j1_true / out[1];
  for (int k = 0; k <= n_max; ++k) out[k] *= ratio;
}

}  // namespace

void spherical_bessel_j_all(int n_max, double x, double* out) {
  if (n_max < 0) {
    throw Error("spherical_bessel_j_all: order must be nonnegative");
  }
  double sign = 1.0;
  if (x < 0.0) {
    x = -x;  // j_n(-x) = (-1)^n j_n(x), applied after the fill below
    sign = -1.0;
  }
  if (x == 0.0) {
    out[0] = 1.0;
    for (int k = 1; k <= n_max; ++k) out[k] = 0.0;
    return;
  }
  if (x < 0.35) {
    fill_small_x(n_max, x, out);
  } else if (x > n_max) {
    fill_forward(n_max, x, out);
  } else {
    fill_miller(n_max, x, out);
  }
  if (sign < 0.0) {
    for (int k = 1; k <= n_max; k += 2) out[k] = -out[k];
  }
}

double spherical_bessel_j(int n, double x) {
  if (n < 0) {
    throw Error("spherical_bessel_j: order must be nonnegative");
  }
  std::vector<double> buf(n + 1);
  spherical_bessel_j_all(n, x, buf.data());
  return buf[n];
}

}  // namespace fbp
