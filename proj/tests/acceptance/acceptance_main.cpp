// Acceptance suite: every shipped claim is exercised at its stated tolerance
// and reported as one pass/fail line. Exit status is the conjunction.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "horizonlab/flow.hpp"
#include "horizonlab/geometry.hpp"
#include "horizonlab/inequalities.hpp"
#include "horizonlab/models.hpp"
#include "horizonlab/profile.hpp"
#include "horizonlab/spectral.hpp"
#include "horizonlab/width.hpp"

using namespace horizonlab;

namespace {

struct Check {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
  void require_le(double value, double bound, const std::string& what) {
    if (!(value <= bound) && pass) {
      pass = false;
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%s: %.3e > %.3e", what.c_str(), value, bound);
      detail = buf;
    }
  }
};

// The admissible parameter wedge, sampled strictly inside on an n x n grid.
std::vector<ModelParams> admissible_grid(int n, double lambda) {
  std::vector<ModelParams> cells;
  cells.reserve(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const double q2l = 0.25 * (i + 0.5) / n;
    const double q = std::sqrt(q2l / lambda);
    const auto [rho_cold, rho_nariai] = critical_radii({.m = 0, .Q = q, .lambda = lambda});
    const double m_lo = double_root_mass(lambda, rho_cold);
    const double m_hi = double_root_mass(lambda, rho_nariai);
    for (int j = 0; j < n; ++j) {
      const double t = (j + 0.5) / n;
      cells.push_back({.m = m_lo + t * (m_hi - m_lo), .Q = q, .lambda = lambda});
    }
  }
  return cells;
}

struct ModelSet {
  WarpedProfile nariai = nariai_profile(3.0, std::sqrt(0.8 / 3.0));
  WarpedProfile cold = cold_profile(3.0, std::sqrt(0.25 / 3.0));
  WarpedProfile ultracold = ultracold_profile(3.0);
  WarpedProfile de_sitter = de_sitter_profile(3.0);
  WarpedProfile generic =
      periodic_profile(integrate_half_profile({.m = 0.10, .Q = 0.08, .lambda = 3.0}));
  WarpedProfile uncharged =
      periodic_profile(integrate_half_profile({.m = 0.05, .Q = 0.0, .lambda = 3.0}));

  std::vector<const WarpedProfile*> all() const {
    return {&nariai, &cold, &ultracold, &de_sitter, &generic, &uncharged};
  }
};

const ModelSet& models() {
  static const ModelSet set;
  return set;
}

// --- criteria ---------------------------------------------------------------

void criterion_field_equations(Check& c) {
  for (const WarpedProfile* prof : {&models().nariai, &models().cold, &models().de_sitter})
    c.require_le(system_residuals(*prof).worst(), 1e-10,
                 "closed-form residual (" + to_string(prof->kind()) + ")");
  c.require_le(system_residuals(models().ultracold).worst(), 1e-12,
               "ultra-cold residual");

  for (const WarpedProfile* prof : {&models().generic, &models().uncharged}) {
    const double at_default = system_residuals(*prof).worst();
    c.require_le(at_default, 1e-7, "numeric residual at default tolerance");
    const WarpedProfile tight =
        periodic_profile(integrate_half_profile(prof->params(), 1e-12));
    const double at_tight = system_residuals(tight).worst();
    c.require(at_tight * 10.0 <= at_default,
              "tightening tol_ode 100x must improve the residual at least 10x");
  }
}

void criterion_scalar_identity(Check& c) {
  for (const WarpedProfile* prof : models().all())
    c.require_le(system_residuals(*prof).scalar_identity_residual, 1e-9,
                 "scalar identity (" + to_string(prof->kind()) + ")");
}

void criterion_root_structure(Check& c) {
  for (const ModelParams& p : admissible_grid(50, 3.0)) {
    const RootProfile roots = horizon_roots(p);
    if (roots.degenerate || roots.positive_roots.size() != 3) {
      c.require(false, "grid cell lost the three-positive-root structure");
      return;
    }
    c.require_le(roots.max_residual, 1e-12, "quartic residual");
    const bool ordered = roots.r_minus() < roots.rho_star_star &&
                         roots.rho_star_star < roots.r_plus() &&
                         roots.r_plus() < roots.rho_star &&
                         roots.rho_star < roots.r_cosmological();
    c.require(ordered, "root interlacing with the critical radii");
    if (!c.pass) return;
  }
  for (double lambda : {1.0, 3.0}) {
    const ModelParams uc{.m = std::sqrt(2.0 / (9.0 * lambda)),
                         .Q = std::sqrt(0.25 / lambda),
                         .lambda = lambda};
    const RegimeClass rc = classify_regime(uc);
    c.require(rc.kind == Regime::UltraCold, "ultra-cold point classification");
    c.require_le(std::abs(rc.rho - 1.0 / std::sqrt(2.0 * lambda)), 1e-9,
                 "triple root radius");
  }
}

void criterion_smooth_gluing(Check& c) {
  const double lambda = 3.0;
  int count = 0;
  for (double q2l : {0.02, 0.08, 0.14, 0.20, 0.24}) {
    const double q = std::sqrt(q2l / lambda);
    const auto [rho_cold, rho_nariai] = critical_radii({.m = 0, .Q = q, .lambda = lambda});
    for (double t : {0.35, 0.75}) {
      const double m = double_root_mass(lambda, rho_cold) +
                       t * (double_root_mass(lambda, rho_nariai) -
                            double_root_mass(lambda, rho_cold));
      const WarpedProfile prof =
          periodic_profile(integrate_half_profile({.m = m, .Q = q, .lambda = lambda}));
      const GluingReport rep = check_smooth_gluing(prof, 5);
      ++count;
      for (const GluingOrder& row : rep.orders) {
        if (row.order % 2 == 1) {
          c.require_le(row.odd_at_zero, row.tolerance * row.scale_at_zero,
                       "odd derivative at s=0, order " + std::to_string(row.order));
          c.require_le(row.odd_at_half, row.tolerance * row.scale_at_half,
                       "odd derivative at s=a, order " + std::to_string(row.order));
        }
      }
      c.require(rep.all_pass, "gluing report all_pass");
      if (!c.pass) return;
    }
  }
  c.require(count == 10, "ten profiles sampled");
}

void criterion_horizon_indices(Check& c) {
  for (const ModelParams& p : admissible_grid(50, 3.0)) {
    const RootProfile roots = horizon_roots(p);
    c.require(jacobi_spectrum(p, roots.r_cosmological()).index == 1, "index(r_c) = 1");
    c.require(jacobi_spectrum(p, roots.r_plus()).index == 0, "index(r_+) = 0");
    if (!c.pass) return;
  }
  const SpectralReport equator =
      jacobi_spectrum({.m = 0, .Q = 0, .lambda = 3.0}, std::sqrt(1.0));
  c.require(equator.index == 1 && equator.nullity == 3,
            "de Sitter equator index 1, nullity 3");

  std::mt19937 rng(2026u);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double lambda = 0.5 + 4.0 * u01(rng);
    const double q2l = 0.24 * u01(rng);
    const ModelParams p{.m = 0.0, .Q = std::sqrt(q2l / lambda), .lambda = lambda};
    const double a = (0.05 + 2.0 * u01(rng)) / std::sqrt(lambda);
    const Stability st = classify_stability(p, a);
    const SpectralReport rep = jacobi_spectrum(p, a);
    if (st == Stability::Unstable) c.require(rep.index > 0, "threshold vs spectrum");
    if (st == Stability::StrictlyStable)
      c.require(rep.index == 0 && rep.nullity == 0, "threshold vs spectrum");
  }
}

void criterion_width(Check& c) {
  // Sweepout maximum against the horizon area over the full grid; the probe
  // on a sampled subset of profiles.
  const auto grid = admissible_grid(50, 3.0);
  int cell = 0;
  for (const ModelParams& p : grid) {
    const WarpedProfile prof = periodic_profile(integrate_half_profile(p, 1e-10, 1024));
    const SweepoutEval eval = sweepout_value(prof, 1e-9);
    c.require(eval.matches_theorem, "max slice area = horizon area with index 1");
    if (!c.pass) return;
    if (cell % 321 == 17) {
      const std::vector<PerturbationFamily> families = {
          {0.0, 0}, {1e-2, 0}, {1e-2, 1}, {1e-2, 2}, {5e-3, 4}};
      const ProbeResult probe = perturbation_probe(prof, families, 128, 48);
      c.require(probe.holds, "perturbation probe undercut the sweepout value");
    }
    ++cell;
  }
}

void criterion_charge(Check& c) {
  for (const WarpedProfile* prof : models().all()) {
    const double expect = prof->params().Q;
    for (int i = 1; i <= 20; ++i) {
      const double s = prof->length() * i / 21.0;
      const ChargeValue q = charge(*prof, s);
      c.require_le(std::abs(q.electric - expect), 1e-10,
                   "charge homology invariance (" + to_string(prof->kind()) + ")");
      const ChargeValue flipped = charge(*prof, s, -1);
      c.require(q.electric == -flipped.electric, "orientation antisymmetry");
      if (!c.pass) return;
    }
  }
}

void criterion_area_charge(Check& c) {
  for (const ModelParams& p : admissible_grid(50, 3.0)) {
    const double rc = horizon_roots(p).r_cosmological();
    const double area = 4.0 * kPi * rc * rc;
    const InequalityReport rep = area_charge_inequality(area, p.Q, 0.0, p.lambda, 0);
    c.require(rep.holds && rep.slack > 0.0, "strict slack at the cosmological slice");
    const ChargeAreaBounds bounds = charge_and_area_bounds(p.Q, p.lambda);
    c.require(bounds.charge_bound.holds, "charge bound");
    c.require(area >= bounds.area_min && area <= bounds.area_max,
              "area interval membership");
    if (!c.pass) return;
  }
  const InequalityReport ds = area_charge_inequality(
      4.0 * kPi, 0.0, 0.0, 3.0, 0, 1e-8, RigidityInputs{true, true, true});
  c.require_le(std::abs(ds.slack), 1e-10, "de Sitter saturation");
  c.require(ds.saturated && ds.rigidity_flags.size() == 4, "rigidity flags set");
}

void criterion_mass_bound(Check& c) {
  for (const ModelParams& p : admissible_grid(50, 3.0)) {
    c.require(mass_bound_check(p).holds, "mass bound on the physical region");
    if (!c.pass) return;
  }
  const double lambda = 2.0;
  const ModelParams uc{.m = std::sqrt(2.0 / (9.0 * lambda)),
                       .Q = std::sqrt(0.25 / lambda),
                       .lambda = lambda};
  c.require_le(std::abs(mass_bound_check(uc).slack), 1e-12, "ultra-cold saturation");
}

void criterion_flow(Check& c) {
  for (const WarpedProfile* prof : models().all()) {
    const double s0 = prof->kind() == ProfileKind::ColdBlackHole ||
                              prof->kind() == ProfileKind::UltraCold
                          ? 0.3 * prof->length()
                          : 0.5 * prof->half_period();
    const FlowState state = flow_slice(*prof, s0, 10.0);
    c.require_le(first_variation_residual(state, *prof), 1e-8,
                 "first variation residual (" + to_string(prof->kind()) + ")");
    if (!c.pass) return;
  }
  // Product flow preserves area; horizon starts are stationary.
  const FlowState nariai = flow_slice(models().nariai, 0.2, 100.0);
  double drift = 0.0;
  for (double a : nariai.area) drift = std::max(drift, std::abs(a - nariai.area.front()));
  c.require_le(drift, 1e-10, "Nariai area drift over t in [0, 100]");

  const double a = models().generic.half_period();
  const FlowState pinned = flow_slice(models().generic, a - 1e-12, 100.0);
  double pin_drift = 0.0;
  for (double ar : pinned.area) pin_drift = std::max(pin_drift, std::abs(ar - pinned.area.front()));
  c.require_le(pin_drift, 1e-10, "horizon start stationarity");
}

void criterion_pohozaev(Check& c) {
  const WarpedProfile& ds = models().de_sitter;
  const PohozaevReport hemi = pohozaev_identity(ds, 0.0, ds.half_period());
  c.require_le(hemi.residual, 1e-10, "de Sitter hemisphere residual");

  const WarpedProfile& prof = models().generic;
  const PohozaevReport base = pohozaev_identity(prof, 0.0, prof.half_period(), 512);
  c.require_le(base.residual, 1e-6, "generic region residual");
  const PohozaevReport fine = pohozaev_identity(prof, 0.0, prof.half_period(), 1024);
  c.require(fine.residual <= 0.5 * base.residual + 1e-11,
            "refinement halves the residual");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "field equation residuals (closed forms 1e-10, numeric 1e-7, scaling)",
       criterion_field_equations},
      {2, "scalar identity R - 2L - 2|F|^2 within 1e-9", criterion_scalar_identity},
      {3, "root structure and critical radii on the 50x50 grid", criterion_root_structure},
      {4, "smooth gluing orders k <= 5 on 10 profiles", criterion_smooth_gluing},
      {5, "horizon Morse indices and stability thresholds", criterion_horizon_indices},
      {6, "sweepout width equals the unstable horizon area", criterion_width},
      {7, "charge quadrature: homology invariance and orientation", criterion_charge},
      {8, "area-charge inequality, bounds, de Sitter saturation", criterion_area_charge},
      {9, "mass bound with ultra-cold saturation", criterion_mass_bound},
      {10, "V-speed flow: first variation, product and horizon cases", criterion_flow},
      {11, "boundary identity on hemisphere and generic region", criterion_pohozaev},
  };

  int failures = 0;
  for (const Criterion& crit : criteria) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      crit.run(check);
    } catch (const std::exception& e) {
      check.pass = false;
      check.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (check.pass) {
      std::printf("[PASS] criterion %02d: %s (%.2fs)\n", crit.id, crit.label, seconds);
    } else {
      std::printf("[FAIL] criterion %02d: %s -- %s\n", crit.id, crit.label,
                  check.detail.c_str());
      ++failures;
    }
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
