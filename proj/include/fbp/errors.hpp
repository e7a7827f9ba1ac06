#pragma once

#include <stdexcept>
#include <string>

namespace fbp {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// p or w is not strictly positive somewhere on the mesh.
class NonPositiveCoefficient : public Error {
 public:
  using Error::Error;
};

// |f| dropped below 1e-12 * max|f|; retry with the complex combination
// f = f1 + i*f2 (see build_coefficient_grid_complex).
class VanishingSolution : public Error {
 public:
  using Error::Error;
};

// Array length does not match the mesh it is supposed to live on.
class MeshMismatch : public Error {
 public:
  using Error::Error;
};

// Coefficient recurrence diverged (mesh too coarse or truncation too large).
class NumericalBlowup : public Error {
 public:
  using Error::Error;
};

// Direct coefficient formulas requested beyond their usable order.
class OrderTooLarge : public Error {
 public:
  using Error::Error;
};

class NegativeFrequency : public Error {
 public:
  using Error::Error;
};

// Frequency generator called with d + delta = 0.
class DegenerateStep : public Error {
 public:
  using Error::Error;
};

// s'(omega, 0) vanished while mixing the reduced basis (internal error).
class ZeroDerivativeAtOrigin : public Error {
 public:
  using Error::Error;
};

class OutOfDomain : public Error {
 public:
  using Error::Error;
};

// Heat-polynomial degree exceeds the available formal-power table.
class DegreeTooLarge : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

// Candidate boundary leaves (0, L] on some time node.
class BoundaryOutOfDomain : public Error {
 public:
  using Error::Error;
};

// No regularization parameter kept the coefficient norm under the cap.
class AllLambdasRejected : public Error {
 public:
  using Error::Error;
};

class InfeasibleStart : public Error {
 public:
  using Error::Error;
};

// Optimizer ran out of evaluations before it could produce any iterate.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

class ZeroDividend : public Error {
 public:
  using Error::Error;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class InvalidState : public Error {
 public:
  using Error::Error;
};

// Bad or missing run configuration (CLI layer).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace fbp
