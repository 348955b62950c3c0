#include "horizonlab/models.hpp"

#include <algorithm>
#include <cmath>

#include "horizonlab/errors.hpp"
#include "horizonlab/quartic.hpp"

namespace horizonlab {

std::string to_string(Regime kind) {
  switch (kind) {
    case Regime::DeSitter: return "DeSitter";
    case Regime::RNdSGeneric: return "RNdSGeneric";
    case Regime::Nariai: return "Nariai";
    case Regime::ColdBlackHole: return "ColdBlackHole";
    case Regime::UltraCold: return "UltraCold";
    case Regime::NoPhysicalHorizon: return "NoPhysicalHorizon";
  }
  return "?";
}

std::string to_string(RigidityFlag flag) {
  switch (flag) {
    case RigidityFlag::TotallyGeodesic: return "TotallyGeodesic";
    case RigidityFlag::NormalAlignedField: return "NormalAlignedField";
    case RigidityFlag::ConstantScalar: return "ConstantScalar";
    case RigidityFlag::EvenGenus: return "EvenGenus";
  }
  return "?";
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::Unstable: return "Unstable";
    case Stability::StrictlyStable: return "StrictlyStable";
    case Stability::Degenerate: return "Degenerate";
  }
  return "?";
}

double ResidualReport::worst() const {
  return std::max({hessian_residual, trace_residual, maxwell_residual,
                   scalar_identity_residual});
}

double lapse_quartic(const ModelParams& p, double r) {
  return p.lambda / 3.0 * r * r * r * r - r * r + 2.0 * p.m * r - p.Q * p.Q;
}

double potential_squared(const ModelParams& p, double r) {
  return 1.0 - 2.0 * p.m / r + (p.Q * p.Q + p.P * p.P) / (r * r) - p.lambda * r * r / 3.0;
}

double radial_accel(const ModelParams& p, double r) {
  return p.m / (r * r) - (p.Q * p.Q + p.P * p.P) / (r * r * r) - p.lambda * r / 3.0;
}

double radial_accel_deriv(const ModelParams& p, double r) {
  return -2.0 * p.m / (r * r * r) + 3.0 * (p.Q * p.Q + p.P * p.P) / (r * r * r * r) -
         p.lambda / 3.0;
}

double double_root_mass(double lambda, double rho) {
  return rho * (1.0 - 2.0 / 3.0 * lambda * rho * rho);
}

double double_root_charge_sq(double lambda, double rho) {
  return rho * rho * (1.0 - lambda * rho * rho);
}

double mass_bound_rhs(double q2l, double lambda) {
  double disc = 1.0 - 4.0 * q2l;
  if (disc < -1e-12) throw ChargeTooLarge("mass bound undefined: 4 Q^2 Lambda > 1");
  disc = std::max(disc, 0.0);
  return (1.0 + 12.0 * q2l + std::pow(disc, 1.5)) / (18.0 * lambda);
}

RootProfile horizon_roots(const ModelParams& p, double tol_root) {
  if (p.lambda <= 0.0) throw NonPositiveLambda("horizon_roots requires Lambda > 0");

  const double q2 = p.Q * p.Q + p.P * p.P;
  const QuarticRoots raw = solve_quartic(p.lambda / 3.0, 0.0, -1.0, 2.0 * p.m, -q2);

  RootProfile out;
  out.roots = raw.roots;
  out.max_residual = raw.max_rel_residual;

  std::complex<double> sum = 0.0;
  for (const auto& z : out.roots) sum += z;
  out.vieta_residual = std::abs(sum);

  double scale = 0.0;
  for (const auto& z : out.roots) scale = std::max(scale, std::abs(z));
  scale = std::max(scale, 1e-30);

  // Multiple roots scatter like eps^(1/2) (double) or eps^(1/3) (triple)
  // under coefficient rounding, so the degeneracy gap is matched to the
  // sqrt of the regime classification band: parameters flagged here are the
  // ones classify_regime places on a boundary curve.
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j)
      if (std::abs(out.roots[i] - out.roots[j]) <= 3e-5 * scale) out.degenerate = true;

  std::vector<double> reals;
  for (const auto& z : out.roots)
    if (std::abs(z.imag()) <= 1e-9 * scale) reals.push_back(z.real());
  std::sort(reals.begin(), reals.end());

  const double positive_floor = 1e-9 * scale;
  for (double r : reals) {
    if (r > positive_floor)
      out.positive_roots.push_back(r);
    else if (r < -positive_floor)
      out.negative_root = r;
  }


  if (4.0 * p.lambda * q2 <= 1.0) {
    const double s = std::sqrt(1.0 - 4.0 * p.lambda * q2);
    out.rho_star_star = std::sqrt((1.0 - s) / (2.0 * p.lambda));
    out.rho_star = std::sqrt((1.0 + s) / (2.0 * p.lambda));
  }

  if (out.max_residual > tol_root)
    throw Error("horizon_roots: refinement missed the residual target");
  return out;
}

std::pair<double, double> critical_radii(const ModelParams& p) {
  if (p.lambda <= 0.0) throw NonPositiveLambda("critical_radii requires Lambda > 0");
  const double q2l = (p.Q * p.Q + p.P * p.P) * p.lambda;
  double disc = 1.0 - 4.0 * q2l;
  if (disc < -1e-12) throw ChargeTooLarge("critical radii undefined: 4 Q^2 Lambda > 1");
  disc = std::max(disc, 0.0);
  const double s = std::sqrt(disc);
  return {std::sqrt((1.0 - s) / (2.0 * p.lambda)), std::sqrt((1.0 + s) / (2.0 * p.lambda))};
}

RegimeClass classify_regime(const ModelParams& p, double tol_regime) {
  if (p.lambda <= 0.0) throw NonPositiveLambda("classify_regime requires Lambda > 0");

  const double q2l = (p.Q * p.Q + p.P * p.P) * p.lambda;
  const double m2l = p.m2l();

  RegimeClass out;
  if (q2l <= tol_regime && m2l <= tol_regime) {
    out.kind = Regime::DeSitter;
    return out;
  }
  if (std::abs(q2l - 0.25) <= tol_regime && std::abs(m2l - 2.0 / 9.0) <= tol_regime) {
    out.kind = Regime::UltraCold;
    out.rho = 1.0 / std::sqrt(2.0 * p.lambda);
    out.alpha_or_beta = 0.0;
    return out;
  }
  if (q2l > 0.25 + tol_regime) {
    out.kind = Regime::NoPhysicalHorizon;
    return out;
  }

  const double q2 = std::min(q2l, 0.25) / p.lambda;
  const auto [rho_cold, rho_nariai] =
      critical_radii(ModelParams{.m = 0.0, .Q = std::sqrt(q2), .lambda = p.lambda});
  const double mn = double_root_mass(p.lambda, rho_nariai);
  const double mc = double_root_mass(p.lambda, rho_cold);
  const double m2l_nariai = mn * mn * p.lambda;
  const double m2l_cold = mc * mc * p.lambda;

  // Boundary curves take precedence over the open regions.
  if (std::abs(m2l - m2l_nariai) <= tol_regime) {
    out.kind = Regime::Nariai;
    out.rho = rho_nariai;
    out.alpha_or_beta = std::sqrt(std::max(p.lambda - q2 / std::pow(rho_nariai, 4), 0.0));
    return out;
  }
  if (std::abs(m2l - m2l_cold) <= tol_regime) {
    out.kind = Regime::ColdBlackHole;
    out.rho = rho_cold;
    out.alpha_or_beta = std::sqrt(std::max(q2 / std::pow(rho_cold, 4) - p.lambda, 0.0));
    return out;
  }
  if (m2l > m2l_cold && m2l < m2l_nariai && p.m > 0.0) {
    out.kind = Regime::RNdSGeneric;
    return out;
  }
  out.kind = Regime::NoPhysicalHorizon;
  return out;
}

InequalityReport mass_bound_check(const ModelParams& p, double tol_ineq) {
  if (p.lambda <= 0.0) throw NonPositiveLambda("mass_bound_check requires Lambda > 0");
  const double q2l = (p.Q * p.Q + p.P * p.P) * p.lambda;
  InequalityReport rep;
  rep.name = "mass_bound";
  rep.lhs = p.m * p.m;
  rep.rhs = mass_bound_rhs(q2l, p.lambda);
  rep.slack = rep.rhs - rep.lhs;
  const double band = tol_ineq * std::max(1.0, std::abs(rep.rhs));
  rep.saturated = std::abs(rep.slack) <= band;
  rep.holds = rep.slack >= -band;
  return rep;
}

}  // namespace horizonlab
