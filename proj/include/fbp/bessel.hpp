#pragma once

#include <vector>

namespace fbp {

// Spherical Bessel function of the first kind, j_n(x), for n >= 0, x >= 0.
// Forward recurrence when x dominates the order, backward (Miller)
// normalization when the order dominates, power series for small arguments.
double spherical_bessel_j(int n, double x);

// Fills out[0..n_max] with j_0(x) .. j_{n_max}(x) in one downward pass.
void spherical_bessel_j_all(int n_max, double x, double* out);

}  // namespace fbp
