#include "horizonlab/flow.hpp"

#include <algorithm>
#include <cmath>

#include "horizonlab/errors.hpp"
#include "horizonlab/numerics.hpp"
#include "horizonlab/ode.hpp"

namespace horizonlab {

FlowState flow_slice(const WarpedProfile& profile, double s0, double t_end,
                     const FlowControls& controls) {
  FlowState out;
  const double speed0 = profile.potential(s0);
  out.stationary = std::abs(speed0) <= controls.stationary_tol;

  // Bracketing horizons: the trajectory may not cross a zero of V.
  double lo = -1e300, hi = 1e300;
  for (double h : profile.horizons()) {
    if (h <= s0 && h > lo) lo = h;
    if (h >= s0 && h < hi) hi = h;
  }
  if (profile.periodic()) {
    // Horizon values repeat with the period; extend the bracket search.
    const double L = profile.length();
    for (double h : profile.horizons()) {
      for (int k = -2; k <= 2; ++k) {
        const double hh = h + k * L;
        if (hh <= s0 && hh > lo) lo = hh;
        if (hh >= s0 && hh < hi) hi = hh;
      }
    }
  }
  const double domain_lo = profile.periodic() ? -1e300 : 0.0;
  const double domain_hi = profile.periodic() ? 1e300 : profile.length();

  // Intermediate Runge-Kutta stages may peek past a non-periodic domain end
  // before the step guard rejects; clamp the lookup, not the trajectory.
  RungeKutta<1>::Rhs rhs = [&profile, domain_lo, domain_hi](
                               double, const std::array<double, 1>& y,
                               std::array<double, 1>& dydt) {
    dydt[0] = profile.potential(std::clamp(y[0], std::max(domain_lo, 0.0),
                                           std::min(domain_hi, profile.length())));
  };
  OdeOptions opt;
  opt.rtol = controls.rtol;
  opt.atol = controls.atol;
  opt.h_init = 1e-4;
  opt.h_max = t_end / 8.0;

  RungeKutta<1> integrator(rhs, opt);
  OdeState<1> state;
  state.y = {s0};

  const int n = std::max(controls.samples, 2);
  out.t.reserve(n + 1);
  out.s.reserve(n + 1);
  out.area.reserve(n + 1);
  auto push = [&](double t, double s) {
    const double v = profile.radius(s);
    out.t.push_back(t);
    out.s.push_back(s);
    out.area.push_back(4.0 * kPi * v * v);
  };
  push(0.0, s0);

  for (int i = 1; i <= n; ++i) {
    const double target = t_end * i / n;
    bool clean = integrator.advance_to(state, target, [&](const OdeState<1>&,
                                                          const OdeState<1>& b) {
      // No overshoot through horizon values of s.
      if (b.y[0] < lo || b.y[0] > hi) return false;
      if (b.y[0] < domain_lo || b.y[0] > domain_hi) return false;
      return true;
    });
    if (!clean) {
      // The step controller tried to cross; clamp onto the horizon and mark
      // the stall. The approach is exponential, so the area is already there.
      state.y[0] = std::clamp(state.y[0], std::max(lo, domain_lo), std::min(hi, domain_hi));
      out.stalled = state.y[0] == lo || state.y[0] == hi;
      out.hit_boundary = state.y[0] == domain_lo || state.y[0] == domain_hi;
      push(target, state.y[0]);
      break;
    }
    push(target, state.y[0]);
  }
  return out;
}

double first_variation_residual(const FlowState& state, const WarpedProfile& profile) {
  const size_t n = state.t.size();
  if (n < 5) return 0.0;
  const double dt = state.t[1] - state.t[0];
  double sup = 0.0;
  for (size_t i = 2; i + 2 < n; ++i) {
    // 4th order central difference of the sampled area.
    const double da = (-state.area[i + 2] + 8.0 * state.area[i + 1] - 8.0 * state.area[i - 1] +
                       state.area[i - 2]) /
                      (12.0 * dt);
    const double s = state.s[i];
    const double pairing = 8.0 * kPi * profile.radius(s) * profile.radius_deriv(s) *
                           profile.potential(s);
    sup = std::max(sup, std::abs(da - pairing));
  }
  return sup;
}

RigidityProbe rigidity_probe(const WarpedProfile& profile, int samples) {
  RigidityProbe out;
  const double lambda = profile.params().lambda;
  const double lo = 0.02 * profile.length();
  const double hi = profile.length() - lo;
  bool first = true;
  double ingredient_scale = 0.0;  // |V|^3 (K + L/3 + 3|E|^2), for the spread band
  for (int i = 0; i <= samples; ++i) {
    const double s = lo + (hi - lo) * i / samples;
    const double v = profile.radius(s);
    if (v <= 1e-8) continue;
    const double V = profile.potential(s);
    const double e = std::abs(profile.e_radial(s));
    const double gauss = 1.0 / (v * v);
    const double alpha = e * V * V;
    const double d = V * V * V * (gauss - lambda / 3.0 - 3.0 * e * e);
    ingredient_scale = std::max(
        ingredient_scale, std::abs(V * V * V) * (gauss + lambda / 3.0 + 3.0 * e * e));
    if (first) {
      out.alpha_min = out.alpha_max = alpha;
      out.d_min = out.d_max = d;
      first = false;
    } else {
      out.alpha_min = std::min(out.alpha_min, alpha);
      out.alpha_max = std::max(out.alpha_max, alpha);
      out.d_min = std::min(out.d_min, d);
      out.d_max = std::max(out.d_max, d);
    }
  }
  out.d_spread = out.d_max - out.d_min;
  out.d_constant = out.d_spread <= 1e-8 * std::max(ingredient_scale, 1e-300);
  out.note = out.d_constant
                 ? "integrability combination constant across slices"
                 : "relation not satisfied on this family (diagnostic only)";
  return out;
}

}  // namespace horizonlab
