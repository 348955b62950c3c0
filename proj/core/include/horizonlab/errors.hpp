#pragma once

#include <stdexcept>
#include <string>

namespace horizonlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lambda <= 0: the de Sitter family analysis is undefined in this library.
class NonPositiveLambda : public Error {
 public:
  using Error::Error;
};

// 4 Lambda Q^2 > 1: the critical radii and the mass bound are not real.
class ChargeTooLarge : public Error {
 public:
  using Error::Error;
};

// Q^2 > 9/(4 Lambda): violates the charge bound for index-one spheres.
class ChargeBoundViolated : public Error {
 public:
  using Error::Error;
};

class OutOfDomain : public Error {
 public:
  using Error::Error;
};

// The turning point of the radius ODE was not found before the s-horizon;
// usually means the parameters were misclassified.
class EventNotFound : public Error {
 public:
  using Error::Error;
};

// A region endpoint handed to the boundary identity is neither a zero of the
// potential nor a coordinate pole.
class NotAHorizonBoundary : public Error {
 public:
  using Error::Error;
};

// A perturbed sweepout surface stopped being a graph over its slice.
class EmbeddingLost : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

}  // namespace horizonlab
