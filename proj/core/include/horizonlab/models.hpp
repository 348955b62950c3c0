#pragma once

#include <utility>

#include "horizonlab/constants.hpp"
#include "horizonlab/types.hpp"

namespace horizonlab {

// The lapse quartic L/3 r^4 - r^2 + 2 m r - Q^2 and helpers shared by the
// whole library.
double lapse_quartic(const ModelParams& p, double r);
// Squared potential V(r)^2 = 1 - 2m/r + Q^2/r^2 - L r^2 / 3.
double potential_squared(const ModelParams& p, double r);
// Radial acceleration g(r) = m/r^2 - Q^2/r^3 - L r / 3 = (V^2)'(r) / 2.
double radial_accel(const ModelParams& p, double r);
double radial_accel_deriv(const ModelParams& p, double r);

// Mass of the double-root family at radius rho: rho (1 - 2 L rho^2 / 3).
double double_root_mass(double lambda, double rho);
// Squared charge of the double-root family: rho^2 (1 - L rho^2).
double double_root_charge_sq(double lambda, double rho);

// Right-hand side of the mass bound: (1 + 12 Q^2 L + (1 - 4 Q^2 L)^{3/2}) / (18 L).
double mass_bound_rhs(double q2l, double lambda);

// All four quartic roots with physical labels, refined residuals, and the
// critical radii. Degeneracy (coinciding real roots) is flagged in-band so the
// closed-form values remain available; consult classify_regime for labels in
// that case.
RootProfile horizon_roots(const ModelParams& p, double tol_root = Tolerances{}.root);

// rho_**^2 = (1 - sqrt(1 - 4 L Q^2)) / (2 L),  rho_*^2 = (1 + sqrt(..)) / (2 L).
// Returns (rho_**, rho_*). Throws ChargeTooLarge when 4 L Q^2 > 1.
std::pair<double, double> critical_radii(const ModelParams& p);

// Classification against the double-root curves of the parameter diagram.
// Boundary curves win over the open regions within tol_regime.
RegimeClass classify_regime(const ModelParams& p, double tol_regime = Tolerances{}.regime);

// m^2 <= (1 + 12 Q^2 L + (1 - 4 Q^2 L)^{3/2}) / (18 L), with saturation flag.
InequalityReport mass_bound_check(const ModelParams& p, double tol_ineq = Tolerances{}.ineq);

}  // namespace horizonlab
