#pragma once

namespace horizonlab {

inline constexpr double kPi = 3.14159265358979323846;

// Default tolerances. Every operation that consumes one of these accepts an
// override; the CLI exposes them through --tol KEY=VAL.
struct Tolerances {
  double root = 1e-12;    // relative quartic residual after Newton polishing
  double regime = 1e-9;   // band on the dimensionless (Q^2 L, m^2 L) plane
  double ode = 1e-10;     // absolute bound on the first-integral drift
  double eig = 1e-9;      // zero-eigenvalue detection band
  double ineq = 1e-8;     // relative saturation band for inequality reports
};

}  // namespace horizonlab
