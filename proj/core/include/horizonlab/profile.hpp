#pragma once

#include <vector>

#include "horizonlab/constants.hpp"
#include "horizonlab/types.hpp"

namespace horizonlab {

enum class ProfileKind { RnDSNumeric, Nariai, ColdBlackHole, UltraCold, DeSitter };

std::string to_string(ProfileKind kind);

class WarpedProfile;

namespace detail {
WarpedProfile product_profile(double lambda, double rho, ProfileKind kind, int samples);
void init_grid(WarpedProfile& profile, int samples);
}  // namespace detail

// A warped-product slice geometry ds^2 + v(s)^2 g_{S^2} with the smooth
// signed potential V(s) and the radial fields Q/v^2, P/v^2.
//
// One authoritative geometry per parameter set: the radius is stored as a
// dense cubic-Hermite table on a uniform grid (default 4096 samples per
// domain) and every downstream quadrature interpolates it instead of
// re-integrating. Second derivatives come from the radial ODE v'' = g(v),
// never from differencing the table.
//
// Sign conventions: on the families where the potential is the arc-length
// derivative of the radius (generic and de Sitter), V(s) = v'(s) is the
// smooth continuation across horizons, positive on (0, a) and negative on
// (a, 2a). The product families carry their own closed-form potentials.
class WarpedProfile {
 public:
  static constexpr int kDefaultSamples = 4096;

  double radius(double s) const;        // v
  double radius_deriv(double s) const;  // v'
  double radius_accel(double s) const;  // v'' = g(v)
  double potential(double s) const;     // smooth signed V
  double potential_deriv(double s) const;
  double potential_second(double s) const;
  double e_radial(double s) const;
  double b_radial(double s) const;

  const ModelParams& params() const { return params_; }
  const RegimeClass& regime() const { return regime_; }
  ProfileKind kind() const { return kind_; }
  bool periodic() const { return periodic_; }
  bool is_half() const { return half_; }

  // The domain is [0, length]; periodic kinds identify the endpoints.
  double length() const { return length_; }
  // Arc length between consecutive horizons (NaN for one-horizon families).
  double half_period() const { return half_period_; }

  const std::vector<double>& grid() const { return s_; }
  const std::vector<double>& radius_samples() const { return v_; }
  const std::vector<double>& radius_deriv_samples() const { return dv_; }

  // Zeros of the potential inside the domain.
  std::vector<double> horizons() const;
  // Coordinate poles (v = 0), present only on the de Sitter family.
  std::vector<double> poles() const;

  // max over samples of |v'^2 - (1 - 2m/v + Q^2/v^2 - L v^2/3)|.
  double first_integral_drift() const;

  // Folds s into the fundamental domain (periodic) or clamps within a
  // tolerance (non-periodic; throws OutOfDomain beyond it).
  double fold(double s) const;

  friend WarpedProfile integrate_half_profile(const ModelParams&, double, int);
  friend WarpedProfile periodic_profile(const WarpedProfile&);
  friend WarpedProfile de_sitter_profile(double, int);
  friend WarpedProfile detail::product_profile(double, double, ProfileKind, int);
  friend void detail::init_grid(WarpedProfile&, int);

 private:
  WarpedProfile() = default;
  double interp(const std::vector<double>& value, const std::vector<double>& slope,
                double s) const;

  ModelParams params_;
  RegimeClass regime_;
  ProfileKind kind_ = ProfileKind::RnDSNumeric;
  bool periodic_ = false;
  bool half_ = false;
  double length_ = 0.0;
  double half_period_ = kNaN;
  double ds_ = 0.0;
  double drift_ = 0.0;
  double alpha_or_beta_ = kNaN;  // product-family frequency
  std::vector<double> s_, v_, dv_, d2v_;
};

// Solves v'' = m/v^2 - Q^2/v^3 - L v/3 from the outer black-hole horizon with
// v' = 0 until v' returns to zero at the cosmological horizon; the event
// position defines the half period. Requires the generic regime.
WarpedProfile integrate_half_profile(const ModelParams& p,
                                     double tol_ode = Tolerances{}.ode,
                                     int samples = WarpedProfile::kDefaultSamples);

// Reflects a half profile across its far horizon and closes the period:
// v(s) on [0, a], v(2a - s) on [a, 2a], with period-2a wraparound.
WarpedProfile periodic_profile(const WarpedProfile& half);

// Closed-form product and round families.
WarpedProfile nariai_profile(double lambda, double rho,
                             int samples = WarpedProfile::kDefaultSamples);
WarpedProfile cold_profile(double lambda, double rho,
                           int samples = WarpedProfile::kDefaultSamples);
WarpedProfile ultracold_profile(double lambda,
                                int samples = WarpedProfile::kDefaultSamples);
WarpedProfile de_sitter_profile(double lambda,
                                int samples = WarpedProfile::kDefaultSamples);

// Classifies and dispatches to the matching builder.
WarpedProfile build_profile(const ModelParams& p, double tol_ode = Tolerances{}.ode,
                            int samples = WarpedProfile::kDefaultSamples);

// s(r) = int_{r_+}^{r} dt / V(t) with the square-root endpoint singularities
// removed by the substitutions t = r_+ + xi^2 and t = r_c - eta^2. Serves as
// the quadrature cross-check of the ODE clock.
double arc_length(const ModelParams& p, double r);

struct GluingOrder {
  int order = 0;
  // Raw one-sided estimates of d^k v at the joints.
  double left_at_zero = 0.0;
  double right_at_zero = 0.0;
  double left_at_half = 0.0;
  double right_at_half = 0.0;
  // Smooth gluing forces odd-order derivatives to vanish at the joints and
  // the even orders to agree from both sides.
  double odd_at_zero = 0.0;
  double odd_at_half = 0.0;
  double mismatch_at_zero = 0.0;
  double mismatch_at_half = 0.0;
  // Local derivative magnitude (1 + |g|) sigma^(k-1), sigma^2 = 1 + |g'|:
  // the defect bands scale with it because the inner joint can sit in a
  // boundary layer where every derivative is large.
  double scale_at_zero = 1.0;
  double scale_at_half = 1.0;
  double tolerance = 0.0;  // normalized band tol_glue(k)
  bool pass = true;
};

struct GluingReport {
  std::vector<GluingOrder> orders;
  bool all_pass = true;
  bool step_floor_warning = false;
};

// Order-dependent pass band for the derivative estimates.
double tol_glue(int order);

// Richardson-extrapolated one-sided finite differences of v at the joints
// s in {0, a}. Conditioning limits k_max to 7.
GluingReport check_smooth_gluing(const WarpedProfile& profile, int k_max = 5);

}  // namespace horizonlab
