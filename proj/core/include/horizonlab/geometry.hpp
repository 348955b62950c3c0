#pragma once

#include <vector>

#include "horizonlab/profile.hpp"
#include "horizonlab/types.hpp"

namespace horizonlab {

// Warped-product curvature in the orthonormal frame; two distinct components
// by rotational symmetry.
struct CurvatureComponents {
  double ric_normal = 0.0;      // Ric(ds, ds) = -2 v''/v
  double ric_tangential = 0.0;  // -v''/v + (1 - v'^2)/v^2
  double scalar = 0.0;          // -4 v''/v + 2 (1 - v'^2)/v^2
};

CurvatureComponents curvature_components(const WarpedProfile& profile, double s);

// |T̊|^2 of the trace-free part of Ric - (R/2) g + 2 F ⊗ F - |F|^2 g for the
// combined radial field.
double traceless_tension_norm2(const WarpedProfile& profile, double s);

// Sup-norm defects of the static field equations over the grid (profile
// nodes by default; polar caps of the round family are excluded because the
// coordinate slices degenerate there).
ResidualReport system_residuals(const WarpedProfile& profile,
                                const std::vector<double>& grid = {});

// Geometry of the round slice at s; flags minimal and totally geodesic
// slices.
SliceSurface slice_geometry(const WarpedProfile& profile, double s,
                            int orientation = +1);

}  // namespace horizonlab
