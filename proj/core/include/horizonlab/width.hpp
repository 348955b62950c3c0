#pragma once

#include <span>
#include <vector>

#include "horizonlab/constants.hpp"
#include "horizonlab/profile.hpp"
#include "horizonlab/types.hpp"

namespace horizonlab {

struct SweepoutEval {
  double max_area = 0.0;  // max over s of 4 pi v(s)^2 on the doubled region
  double argmax_s = 0.0;
  double horizon_area = 0.0;  // area of the widest horizon slice
  int index_at_max = -1;
  bool matches_theorem = false;  // max equals the horizon area and index is 1
  bool plateau = false;          // argmax not isolated (product family)
};

// Max slice area of the coordinate sweepout over the doubled region [0, 2a]
// with the strictly stable boundary slices at the ends; the comparison fields
// use the spectral index of the maximizing slice.
SweepoutEval sweepout_value(const WarpedProfile& profile, double rel_tol = 1e-9);

struct PerturbationFamily {
  double epsilon = 0.0;
  int harmonic_degree = 0;  // graph profile h(theta) = P_l(cos theta)
};

struct ProbeResult {
  double min_max_area = 0.0;  // min over families of the sweepout maximum
  double reference = 0.0;     // unperturbed sweepout value
  double tol_probe = 0.0;
  bool holds = false;  // min_max_area >= reference - tol_probe
  std::vector<double> family_maxima;
};

// Evidence, not proof: areas of axisymmetric graphical perturbations
// s = sigma + eps h(theta) of each slice, by quadrature over (s, theta).
// The probe band tol_probe(eps) = C eps^3 was fitted from refinement runs.
ProbeResult perturbation_probe(const WarpedProfile& profile,
                               std::span<const PerturbationFamily> families,
                               int sigma_samples = 256, int theta_nodes = 64);

double tol_probe(double epsilon, double reference_area);

}  // namespace horizonlab
