#pragma once

#include <stdexcept>
#include <string>

namespace gxt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

// algebra fails the invariants (antisymmetry, Jacobi, SPD inner product)
struct InvalidAlgebra : Error {
  using Error::Error;
};

// upper central series stabilizes strictly below the full algebra
struct NotNilpotent : Error {
  using Error::Error;
};

// [g,[g,g]] != 0, so the truncated product is not the group law
struct NotTwoStep : Error {
  using Error::Error;
};

// a commuting-pair kernel came out smaller than the layer condition promises
struct ConditionFails : Error {
  using Error::Error;
};

// a sampled geodesic did not leave the ball within the integration horizon
struct HorizonExceeded : Error {
  using Error::Error;
};

// geodesic still meets the support ball at the end of its domain
struct NonEscaping : Error {
  using Error::Error;
};

// cylindrical metric components degenerate on the axis r = 0
struct AxisDegenerate : Error {
  using Error::Error;
};

struct GridError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace gxt
