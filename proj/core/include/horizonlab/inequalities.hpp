#pragma once

#include <optional>

#include "horizonlab/constants.hpp"
#include "horizonlab/profile.hpp"
#include "horizonlab/types.hpp"

namespace horizonlab {

// Flux charge Q(Sigma) = (1/4pi) int <E, N> dmu of the slice at s, by
// quadrature over the sphere. Homology invariant since div E = 0.
ChargeValue charge(const WarpedProfile& profile, double s, int orientation = +1,
                   int quad_nodes = 32);

// Geometric saturation inputs the caller supplies from slice data; the genus
// parity is computed by the inequality itself.
struct RigidityInputs {
  bool totally_geodesic = false;
  bool normal_aligned_field = false;
  bool constant_scalar = false;
};

// Lambda |S| + 16 pi^2 (Q_E^2 + Q_B^2)/|S| <= 12 pi + 8 pi (g/2 - floor(g/2)).
InequalityReport area_charge_inequality(double area, double q_e, double q_b, double lambda,
                                        int genus, double tol_ineq = Tolerances{}.ineq,
                                        const std::optional<RigidityInputs>& geom = {});

struct ChargeAreaBounds {
  InequalityReport charge_bound;  // Q^2 <= 9 / (4 Lambda)
  double area_min = 0.0;          // (2 pi / L)(3 - sqrt(9 - 4 L Q^2))
  double area_max = 0.0;          // (2 pi / L)(3 + sqrt(9 - 4 L Q^2))
};

// Bounds for genus-zero index-one slices. Throws ChargeBoundViolated when the
// charge bound fails.
ChargeAreaBounds charge_and_area_bounds(double q_e, double lambda,
                                        double tol_ineq = Tolerances{}.ineq);

struct PohozaevReport {
  double lhs = 0.0;  // 2 pi sum_i k_i chi(boundary_i)
  double rhs = 0.0;  // bulk integral + boundary flux terms
  double residual = 0.0;
  double bulk_integral = 0.0;
  std::vector<double> boundary_gradients;  // k_i = |dV/ds| per horizon boundary
  int intervals = 0;
};

// Both sides of the boundary identity
//   2 pi sum_i k_i chi = int (|T̊|^2 + (2/3)(L - |F|^2)|F|^2) V dv
//                        + sum_i int k_i (L/3 + |F|^2) dmu_i
// over [s1, s2], reduced to one-dimensional quadratures by symmetry. Region
// endpoints must be zeros of V (or coordinate poles, which contribute no
// boundary). The V >= 0 convention is used and k_i = |dV/ds| >= 0.
PohozaevReport pohozaev_identity(const WarpedProfile& profile, double s1, double s2,
                                 int intervals = 512, double horizon_tol = 1e-8);

}  // namespace horizonlab
