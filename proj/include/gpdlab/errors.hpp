#pragma once

#include <stdexcept>
#include <string>

namespace gpdlab {

// Base class for every error thrown by the library. Constructors and checked
// operations throw eagerly; anything that got past construction is assumed valid.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexError : Error {
  using Error::Error;
};

// Raised when a table fails one of the groupoid (or group) axioms.
struct AxiomViolation : Error {
  using Error::Error;
};

struct NotComposable : Error {
  using Error::Error;
};

struct NotAUnit : Error {
  using Error::Error;
};

struct NotSubgroupoid : Error {
  using Error::Error;
};

struct NotGroupBundle : Error {
  using Error::Error;
};

// Elements of one groupoid fed into an algebra built over another.
struct GroupoidMismatch : Error {
  using Error::Error;
};

struct NotSubalgebra : Error {
  using Error::Error;
};

// Spectral splitting could not separate eigenvalue clusters after reseeding.
struct NumericalDegeneracy : Error {
  using Error::Error;
};

// The span closure of a generating set did not land on a block-subset ideal.
struct ClosureNotIdeal : Error {
  using Error::Error;
};

struct NotCentralInclusion : Error {
  using Error::Error;
};

// A functional expected to be positive has a negative Gram eigenvalue.
struct NotPositive : Error {
  using Error::Error;
};

struct NotPositiveDefinite : Error {
  using Error::Error;
};

struct NotANormalizer : Error {
  using Error::Error;
};

struct NotRegularInclusion : Error {
  using Error::Error;
};

struct SupportOutsideInteriorIsotropy : Error {
  using Error::Error;
};

// Enumeration bounds would exceed the hard instance / lattice caps.
struct BoundTooLarge : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace gpdlab
