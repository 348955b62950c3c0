#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "horizonlab/constants.hpp"
#include "horizonlab/profile.hpp"
#include "horizonlab/types.hpp"

namespace horizonlab {

// Spectrum of minus the Jacobi operator of the round slice of radius a:
// mu_l = l(l+1)/a^2 - (Lambda + Q^2/a^4 - 1/a^2), multiplicity 2l+1.
SpectralReport jacobi_spectrum(const ModelParams& p, double a, int l_max = 10,
                               double tol_eig = Tolerances{}.eig);

// Threshold classification: unstable outside [rho_**^2, rho_*^2] in a^2,
// strictly stable inside, degenerate on the thresholds (within the band the
// eigenvalue tolerance induces).
Stability classify_stability(const ModelParams& p, double a,
                             double tol_eig = Tolerances{}.eig);

// Second-variation energy B(f) = int |grad f|^2 - (Ric(N,N) + |A|^2) f^2 dmu
// of an axisymmetric test function on the slice at s0. `f` and `df_dtheta`
// are functions of theta in [0, pi].
double rayleigh_quotient(const WarpedProfile& profile, double s0,
                         const std::function<double(double)>& f,
                         const std::function<double(double)>& df_dtheta,
                         int quad_nodes = 64);

// Same with f = P_l(cos theta).
double rayleigh_quotient_mode(const WarpedProfile& profile, double s0, int l,
                              int quad_nodes = 64);

// Sampled variant: `values` on a uniform theta grid over [0, pi]; the
// derivative is differenced from the table and the energy integrated on it.
double rayleigh_quotient_sampled(const WarpedProfile& profile, double s0,
                                 std::span<const double> values);

// Norm^2 of the test function on the slice, for eigenvalue comparisons.
double slice_norm2(const WarpedProfile& profile, double s0,
                   const std::function<double(double)>& f, int quad_nodes = 64);

struct HorizonSpectrum {
  std::string horizon;  // "r_minus", "r_plus", "r_c", "equator", "degenerate"
  double radius = 0.0;
  SpectralReport spectrum;
  Stability stability = Stability::Degenerate;
};

struct HorizonIndexReport {
  std::vector<HorizonSpectrum> entries;
  bool degenerate_family = false;  // horizons coincide (product families)
  // The consistency claim checked on the generic family: the cosmological
  // horizon carries exactly the one l = 0 negative mode.
  bool rc_index_is_one = false;
};

// Spectra of every horizon slice of the family at p. The inner horizon is
// reported when present but no claim is attached to it.
HorizonIndexReport horizon_index_report(const ModelParams& p, int l_max = 10,
                                        double tol_eig = Tolerances{}.eig);

}  // namespace horizonlab
