#pragma once

#include <stdexcept>
#include <string>

namespace spinqcorr {

// Base for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input matrix fails the Hermiticity gate.
class NonHermitianError : public Error {
 public:
  NonHermitianError(const std::string& what, double max_asymmetry)
      : Error(what), max_asymmetry(max_asymmetry) {}
  double max_asymmetry;
};

// A state violates trace / positivity requirements beyond tolerance.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature exhausted its evaluation budget. Carries the best
// estimate and the error bound it reached.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_estimate, double error_bound)
      : Error(what), best_estimate(best_estimate), error_bound(error_bound) {}
  double best_estimate;
  double error_bound;
};

// A shifted-contour integral came back with a non-negligible imaginary
// part; signals a transcription bug in the integrand, not a numerics issue.
class ContourIntegrityError : public Error {
 public:
  ContourIntegrityError(const std::string& what, double imag_part)
      : Error(what), imag_part(imag_part) {}
  double imag_part;
};

// Correlator values that cannot form a positive semidefinite state.
class InvalidCorrelatorError : public Error {
 public:
  using Error::Error;
};

class MinimizerError : public Error {
 public:
  using Error::Error;
};

class BracketError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace spinqcorr
