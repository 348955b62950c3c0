#include "horizonlab/inequalities.hpp"

#include <cmath>

#include "horizonlab/errors.hpp"
#include "horizonlab/geometry.hpp"
#include "horizonlab/numerics.hpp"

namespace horizonlab {

ChargeValue charge(const WarpedProfile& profile, double s, int orientation,
                   int quad_nodes) {
  const double v = profile.radius(s);
  const double e = profile.e_radial(s);
  const double b = profile.b_radial(s);
  // <E, N> is constant over the round slice; quadrature kept for the record.
  auto shell = [&](double flux_density) {
    auto integrand = [&](double theta) { return flux_density * std::sin(theta); };
    return 2.0 * kPi * v * v * integrate_gauss(integrand, 0.0, kPi, quad_nodes) /
           (4.0 * kPi);
  };
  ChargeValue out;
  out.orientation = orientation;
  out.electric = shell(e) * orientation;
  out.magnetic = shell(b) * orientation;
  return out;
}

InequalityReport area_charge_inequality(double area, double q_e, double q_b, double lambda,
                                        int genus, double tol_ineq,
                                        const std::optional<RigidityInputs>& geom) {
  if (!(area > 0.0)) throw Error("area_charge_inequality: area must be positive");
  if (genus < 0) throw Error("area_charge_inequality: genus must be nonnegative");
  InequalityReport rep;
  rep.name = "area_charge";
  rep.lhs = lambda * area + 16.0 * kPi * kPi * (q_e * q_e + q_b * q_b) / area;
  const double parity = 0.5 * genus - std::floor(0.5 * genus);
  rep.rhs = 12.0 * kPi + 8.0 * kPi * parity;
  rep.slack = rep.rhs - rep.lhs;
  const double band = tol_ineq * std::max(1.0, std::abs(rep.rhs));
  rep.saturated = std::abs(rep.slack) <= band;
  rep.holds = rep.slack >= -band;
  if (rep.saturated) {
    if (geom) {
      if (geom->totally_geodesic) rep.rigidity_flags.push_back(RigidityFlag::TotallyGeodesic);
      if (geom->normal_aligned_field)
        rep.rigidity_flags.push_back(RigidityFlag::NormalAlignedField);
      if (geom->constant_scalar) rep.rigidity_flags.push_back(RigidityFlag::ConstantScalar);
    }
    if (genus % 2 == 0) rep.rigidity_flags.push_back(RigidityFlag::EvenGenus);
  }
  return rep;
}

ChargeAreaBounds charge_and_area_bounds(double q_e, double lambda, double tol_ineq) {
  if (lambda <= 0.0) throw NonPositiveLambda("charge_and_area_bounds requires Lambda > 0");
  ChargeAreaBounds out;
  out.charge_bound.name = "charge_bound";
  out.charge_bound.lhs = q_e * q_e;
  out.charge_bound.rhs = 9.0 / (4.0 * lambda);
  out.charge_bound.slack = out.charge_bound.rhs - out.charge_bound.lhs;
  const double band = tol_ineq * std::max(1.0, out.charge_bound.rhs);
  out.charge_bound.saturated = std::abs(out.charge_bound.slack) <= band;
  out.charge_bound.holds = out.charge_bound.slack >= -band;
  if (!out.charge_bound.holds)
    throw ChargeBoundViolated("charge bound Q^2 <= 9/(4 Lambda) fails");
  const double disc = std::sqrt(std::max(9.0 - 4.0 * lambda * q_e * q_e, 0.0));
  out.area_min = 2.0 * kPi / lambda * (3.0 - disc);
  out.area_max = 2.0 * kPi / lambda * (3.0 + disc);
  return out;
}

PohozaevReport pohozaev_identity(const WarpedProfile& profile, double s1, double s2,
                                 int intervals, double horizon_tol) {
  if (!(s2 > s1)) throw Error("pohozaev_identity: empty region");
  const double lambda = profile.params().lambda;

  PohozaevReport rep;
  rep.intervals = intervals;

  // Each region endpoint is either a horizon slice (a zero of V, which
  // contributes a boundary sphere) or a coordinate pole (no boundary).
  double boundary_flux = 0.0;
  for (double se : {s1, s2}) {
    const double v = profile.radius(se);
    const double pot = profile.potential(se);
    if (std::abs(pot) <= horizon_tol) {
      const double k = std::abs(profile.potential_deriv(se));
      const double area = 4.0 * kPi * v * v;
      const double e = profile.e_radial(se);
      const double b = profile.b_radial(se);
      rep.boundary_gradients.push_back(k);
      rep.lhs += 2.0 * kPi * k * 2.0;  // chi(S^2) = 2
      boundary_flux += k * (lambda / 3.0 + e * e + b * b) * area;
    } else if (v <= horizon_tol * std::max(1.0, profile.length())) {
      continue;  // pole: the region caps off smoothly
    } else {
      throw NotAHorizonBoundary("pohozaev_identity: endpoint s = " + std::to_string(se) +
                                " is neither a horizon nor a pole");
    }
  }

  auto bulk = [&](double s) {
    const double v = profile.radius(s);
    if (v <= 0.0) return 0.0;
    const double e = profile.e_radial(s);
    const double b = profile.b_radial(s);
    const double f2 = e * e + b * b;
    const double density =
        traceless_tension_norm2(profile, s) + 2.0 / 3.0 * (lambda - f2) * f2;
    // V >= 0 convention on the region; the volume element is 4 pi v^2 ds.
    return density * std::abs(profile.potential(s)) * 4.0 * kPi * v * v;
  };
  rep.bulk_integral = integrate_simpson(bulk, s1, s2, intervals);
  rep.rhs = rep.bulk_integral + boundary_flux;
  rep.residual = std::abs(rep.lhs - rep.rhs);
  return rep;
}

}  // namespace horizonlab
