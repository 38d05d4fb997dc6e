#pragma once

#include <stdexcept>
#include <string>

namespace symplecto {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on tori of different dimension (different q).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (constant term passed to an
/// inverse Laplacian, |z| >= 1 for a harmonic, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Spectral fields or sampled arrays that do not share a grid.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

/// The two directions do not span a 2-plane.
class DegeneratePlane : public Error {
 public:
  using Error::Error;
};

/// Closed-form curvature whose denominator vanishes (resonant mode pair).
class SingularDenominator : public Error {
 public:
  using Error::Error;
};

/// Input to an eigenfunction-only formula is not a Laplace eigenfunction.
class NotEigenfunction : public Error {
 public:
  using Error::Error;
};

/// The supplied eigenbasis does not reproduce the bracket.
class IncompleteBasis : public Error {
 public:
  using Error::Error;
};

/// A closed-form table disagrees with its quadrature cross-check.
class FormulaTranscriptionError : public Error {
 public:
  using Error::Error;
};

}  // namespace symplecto
