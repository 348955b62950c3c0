#pragma once

#include <array>
#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace horizonlab {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// The input of every computation: mass, electric charge, cosmological
// constant, and an optional magnetic charge (geometric units).
struct ModelParams {
  double m = 0.0;
  double Q = 0.0;
  double lambda = 0.0;
  double P = 0.0;

  // Dimensionless coordinates of the parameter diagram.
  double q2l() const { return Q * Q * lambda; }
  double m2l() const { return m * m * lambda; }
};

enum class Regime {
  DeSitter,
  RNdSGeneric,
  Nariai,
  ColdBlackHole,
  UltraCold,
  NoPhysicalHorizon,
};

std::string to_string(Regime kind);

struct RegimeClass {
  Regime kind = Regime::NoPhysicalHorizon;
  // Degenerate (double/triple) root radius; NaN when the regime has none.
  double rho = kNaN;
  // alpha = sqrt(Lambda - Q^2/rho^4) on the Nariai branch,
  // beta  = sqrt(Q^2/rho^4 - Lambda) on the cold branch; both vanish at the
  // ultra-cold point. NaN when not applicable.
  double alpha_or_beta = kNaN;
};

// Roots of the lapse quartic  L/3 r^4 - r^2 + 2 m r - Q^2  with physical
// labels. With four distinct real roots exactly one is negative and the
// positive ones are (r_-, r_+, r_c) in increasing order.
struct RootProfile {
  std::array<std::complex<double>, 4> roots{};
  std::vector<double> positive_roots;  // ascending
  std::optional<double> negative_root;
  double rho_star = kNaN;       // outer critical radius
  double rho_star_star = kNaN;  // inner critical radius
  // Two real roots coincide within the cluster tolerance; labels are withheld
  // and the caller should consult classify_regime.
  bool degenerate = false;
  double max_residual = 0.0;    // worst relative polynomial residual
  double vieta_residual = 0.0;  // |sum of roots| (the cubic term vanishes)

  // Horizon labels make sense only for distinct roots; degenerate clusters
  // withhold them (consult classify_regime for the closed-form radii).
  bool has_three_positive() const { return !degenerate && positive_roots.size() == 3; }
  double r_minus() const { return has_three_positive() ? positive_roots[0] : kNaN; }
  double r_plus() const {
    if (degenerate || positive_roots.size() < 2) return kNaN;
    return positive_roots[positive_roots.size() - 2];
  }
  double r_cosmological() const {
    if (degenerate || positive_roots.empty()) return kNaN;
    return positive_roots.back();
  }
};

enum class RigidityFlag { TotallyGeodesic, NormalAlignedField, ConstantScalar, EvenGenus };

std::string to_string(RigidityFlag flag);

// Left/right sides of one inequality, its slack, and the rigidity checklist
// evaluated when the inequality saturates.
struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool holds = false;
  bool saturated = false;
  std::vector<RigidityFlag> rigidity_flags;
};

// Sup-norm defects of the field equations over an evaluation grid.
struct ResidualReport {
  double hessian_residual = 0.0;
  double trace_residual = 0.0;
  double maxwell_residual = 0.0;
  double scalar_identity_residual = 0.0;

  double worst() const;
};

struct SpectralMode {
  int l = 0;
  double eigenvalue = 0.0;  // of minus the Jacobi operator
  int multiplicity = 1;
};

struct SpectralReport {
  std::vector<SpectralMode> modes;
  int index = 0;    // negative eigenvalues with multiplicity
  int nullity = 0;  // zero eigenvalues with multiplicity
  double potential_constant = 0.0;  // Lambda + Q^2/a^4 - 1/a^2
  // Smallest l with a strictly positive eigenvalue; the count above is
  // complete because the eigenvalues increase in l.
  int completion_degree = 0;
};

enum class Stability { Unstable, StrictlyStable, Degenerate };

std::string to_string(Stability s);

// Geometry of one round coordinate slice.
struct SliceSurface {
  double s = 0.0;
  double radius = 0.0;
  double area = 0.0;
  double mean_curvature = 0.0;          // 2 v'/v with respect to +ds
  double second_fundamental_norm2 = 0;  // |A|^2 = 2 (v'/v)^2
  double gauss_curvature = 0.0;         // 1/v^2
  int genus = 0;
  int normal_orientation = +1;
  bool minimal = false;
  bool totally_geodesic = false;
};

// Flux charge of a surface together with the orientation used.
struct ChargeValue {
  double electric = 0.0;
  double magnetic = 0.0;
  int orientation = +1;
};

}  // namespace horizonlab
