#pragma once

#include <string>
#include <vector>

#include "horizonlab/constants.hpp"
#include "horizonlab/profile.hpp"

namespace horizonlab {

struct FlowControls {
  double rtol = 1e-10;
  double atol = 1e-12;
  int samples = 2048;            // dense output resolution in t
  double stationary_tol = 1e-9;  // |V(s0)| below this marks a horizon start
};

struct FlowState {
  std::vector<double> t;
  std::vector<double> s;
  std::vector<double> area;
  bool stationary = false;
  bool stalled = false;  // progress fell under the step floor near a horizon
  bool hit_boundary = false;
};

// Normal flow of the slice at s0 with speed V and the +ds normal convention:
// ds/dt = V(s). Trajectories approach zeros of V asymptotically and never
// cross them; step control enforces the bracket.
FlowState flow_slice(const WarpedProfile& profile, double s0, double t_end,
                     const FlowControls& controls = {});

// Sup over the trajectory of |d(area)/dt - 8 pi v v' V|, the chain rule
// against the geometric pairing int <V N, -H vec> dmu. The time derivative is
// differenced from the dense output.
double first_variation_residual(const FlowState& state, const WarpedProfile& profile);

struct RigidityProbe {
  // |E| V^2 across slices: constant on each slice by symmetry; its
  // s-dependence is reported as data.
  double alpha_min = 0.0;
  double alpha_max = 0.0;
  // D(s) = V^3 (K - Lambda/3 - 3 |E|^2), the integrability combination whose
  // constancy characterizes the warped rigidity case.
  double d_min = 0.0;
  double d_max = 0.0;
  double d_spread = 0.0;
  bool d_constant = false;
  std::string note;
};

// Diagnostic only: reports the constancy data, never asserts. The rigidity
// conclusions apply to the constant-area hypothesis, which the model families
// meet only degenerately.
RigidityProbe rigidity_probe(const WarpedProfile& profile, int samples = 256);

}  // namespace horizonlab
