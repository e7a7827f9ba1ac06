#pragma once

#include <cstddef>
#include <vector>

namespace fbp {

// Cumulative integral F(y_j) ~= int_0^{y_j} v on a uniform mesh with spacing h,
// F(y_0) = 0. Uses a fourth-order Adams-type end-corrected rule (exact on
// cubics); arrays shorter than 4 fall back to the trapezoid rule.
//
// The recursive constructions downstream nest dozens of these integrals, and
// second-order noise amplifies through the nesting; a fourth-order rule keeps
// the final coefficient tails at their truncation level on a 10^4-point mesh.
std::vector<double> cumulative_integral(const std::vector<double>& values, double h);

// Definite integral over the whole mesh, same rule.
double integrate(const std::vector<double>& values, double h);

// Adaptive Simpson quadrature of fn over [a, b] to tolerance tol.
// Used by tests as an independent oracle for the mesh-based rule.
double adaptive_integral(double (*fn)(double, const void*), const void* ctx, double a,
                         double b, double tol);

}  // namespace fbp
