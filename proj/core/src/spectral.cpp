#include "horizonlab/spectral.hpp"

#include <cmath>

#include "horizonlab/errors.hpp"
#include "horizonlab/geometry.hpp"
#include "horizonlab/models.hpp"
#include "horizonlab/numerics.hpp"

namespace horizonlab {

SpectralReport jacobi_spectrum(const ModelParams& p, double a, int l_max, double tol_eig) {
  if (!(a > 0.0)) throw Error("jacobi_spectrum: slice radius must be positive");
  if (l_max < 2) l_max = 2;
  const double q2 = p.Q * p.Q + p.P * p.P;
  SpectralReport rep;
  rep.potential_constant = p.lambda + q2 / (a * a * a * a) - 1.0 / (a * a);
  rep.completion_degree = -1;
  for (int l = 0; l <= l_max; ++l) {
    SpectralMode mode;
    mode.l = l;
    mode.eigenvalue = l * (l + 1.0) / (a * a) - rep.potential_constant;
    mode.multiplicity = 2 * l + 1;
    if (mode.eigenvalue < -tol_eig)
      rep.index += mode.multiplicity;
    else if (mode.eigenvalue <= tol_eig)
      rep.nullity += mode.multiplicity;
    else if (rep.completion_degree < 0)
      rep.completion_degree = l;
    rep.modes.push_back(mode);
  }
  // mu_l increases in l, so the counts are complete once one positive
  // eigenvalue appears.
  if (rep.completion_degree < 0) rep.completion_degree = l_max + 1;
  return rep;
}

Stability classify_stability(const ModelParams& p, double a, double tol_eig) {
  if (p.lambda <= 0.0) throw NonPositiveLambda("classify_stability requires Lambda > 0");
  const double q2l = (p.Q * p.Q + p.P * p.P) * p.lambda;
  if (4.0 * q2l >= 1.0)
    throw ChargeTooLarge("classify_stability: needs 0 <= 4 Lambda Q^2 < 1");
  if (!(a > 0.0)) throw Error("classify_stability: slice radius must be positive");
  // The l = 0 eigenvalue changes sign exactly on the critical thresholds
  // a^2 = rho_**^2, rho_*^2.
  const double q2 = q2l / p.lambda;
  const double mu0 = -(p.lambda + q2 / (a * a * a * a) - 1.0 / (a * a));
  if (std::abs(mu0) <= tol_eig) return Stability::Degenerate;
  return mu0 < 0.0 ? Stability::Unstable : Stability::StrictlyStable;
}

double rayleigh_quotient(const WarpedProfile& profile, double s0,
                         const std::function<double(double)>& f,
                         const std::function<double(double)>& df_dtheta, int quad_nodes) {
  const double v = profile.radius(s0);
  const double dv = profile.radius_deriv(s0);
  const double d2v = profile.radius_accel(s0);
  // Ric(N,N) + |A|^2 for the +ds normal.
  const double potential = -2.0 * d2v / v + 2.0 * (dv / v) * (dv / v);

  // Axisymmetric integrands: dmu = 2 pi v^2 sin(theta) dtheta and
  // |grad f|^2 = (f'(theta)/v)^2.
  auto integrand = [&](double theta) {
    const double grad = df_dtheta(theta) / v;
    const double val = f(theta);
    return (grad * grad - potential * val * val) * std::sin(theta);
  };
  return 2.0 * kPi * v * v * integrate_gauss(integrand, 0.0, kPi, quad_nodes);
}

double slice_norm2(const WarpedProfile& profile, double s0,
                   const std::function<double(double)>& f, int quad_nodes) {
  const double v = profile.radius(s0);
  auto integrand = [&](double theta) {
    const double val = f(theta);
    return val * val * std::sin(theta);
  };
  return 2.0 * kPi * v * v * integrate_gauss(integrand, 0.0, kPi, quad_nodes);
}

double rayleigh_quotient_sampled(const WarpedProfile& profile, double s0,
                                 std::span<const double> values) {
  const int n = static_cast<int>(values.size());
  if (n < 5) throw Error("rayleigh_quotient_sampled: need at least 5 samples");
  const double h = kPi / (n - 1);
  const double v = profile.radius(s0);
  const double dv = profile.radius_deriv(s0);
  const double d2v = profile.radius_accel(s0);
  const double potential = -2.0 * d2v / v + 2.0 * (dv / v) * (dv / v);

  auto deriv = [&](int i) {
    if (i == 0) return (-3.0 * values[0] + 4.0 * values[1] - values[2]) / (2.0 * h);
    if (i == n - 1)
      return (3.0 * values[n - 1] - 4.0 * values[n - 2] + values[n - 3]) / (2.0 * h);
    return (values[i + 1] - values[i - 1]) / (2.0 * h);
  };
  // Composite Simpson on the sample grid (n odd gives a clean panel count;
  // the trailing interval falls back to trapezoid otherwise).
  double acc = 0.0;
  auto integrand = [&](int i) {
    const double theta = i * h;
    const double grad = deriv(i) / v;
    return (grad * grad - potential * values[i] * values[i]) * std::sin(theta);
  };
  int last = (n % 2 == 1) ? n - 1 : n - 2;
  for (int i = 0; i + 2 <= last; i += 2)
    acc += h / 3.0 * (integrand(i) + 4.0 * integrand(i + 1) + integrand(i + 2));
  if (n % 2 == 0) acc += 0.5 * h * (integrand(n - 2) + integrand(n - 1));
  return 2.0 * kPi * v * v * acc;
}

double rayleigh_quotient_mode(const WarpedProfile& profile, double s0, int l,
                              int quad_nodes) {
  auto f = [l](double theta) { return legendre_p(l, std::cos(theta)); };
  auto df = [l](double theta) {
    return -std::sin(theta) * legendre_p_deriv(l, std::cos(theta));
  };
  return rayleigh_quotient(profile, s0, f, df, quad_nodes);
}

HorizonIndexReport horizon_index_report(const ModelParams& p, int l_max, double tol_eig) {
  const RegimeClass rc = classify_regime(p);
  HorizonIndexReport rep;

  auto add = [&](const std::string& name, double radius) {
    HorizonSpectrum entry;
    entry.horizon = name;
    entry.radius = radius;
    entry.spectrum = jacobi_spectrum(p, radius, l_max, tol_eig);
    if (std::abs(entry.spectrum.potential_constant) <= tol_eig)
      entry.stability = Stability::Degenerate;
    else
      entry.stability = entry.spectrum.potential_constant > 0.0 ? Stability::Unstable
                                                                : Stability::StrictlyStable;
    rep.entries.push_back(entry);
  };

  switch (rc.kind) {
    case Regime::RNdSGeneric: {
      const RootProfile roots = horizon_roots(p);
      if (roots.has_three_positive()) add("r_minus", roots.r_minus());
      add("r_plus", roots.r_plus());
      add("r_c", roots.r_cosmological());
      const SpectralReport& rc_spec = rep.entries.back().spectrum;
      rep.rc_index_is_one = (rc_spec.index == 1);
      break;
    }
    case Regime::DeSitter: {
      add("equator", std::sqrt(3.0 / p.lambda));
      rep.rc_index_is_one = (rep.entries.back().spectrum.index == 1);
      break;
    }
    case Regime::Nariai:
    case Regime::ColdBlackHole:
    case Regime::UltraCold: {
      rep.degenerate_family = true;
      add("degenerate", rc.rho);
      break;
    }
    case Regime::NoPhysicalHorizon:
      throw Error("horizon_index_report: no horizons for these parameters");
  }
  return rep;
}

}  // namespace horizonlab
