#include <cmath>

#include "doctest.h"
#include "horizonlab/geometry.hpp"
#include "horizonlab/models.hpp"
#include "horizonlab/profile.hpp"

using namespace horizonlab;

namespace {

const ModelParams kGeneric{.m = 0.10, .Q = 0.08, .lambda = 3.0};

const WarpedProfile& generic_full() {
  static const WarpedProfile full = periodic_profile(integrate_half_profile(kGeneric));
  return full;
}

}  // namespace

TEST_CASE("warped curvature on the product and round families") {
  SUBCASE("Nariai cylinder") {
    const double lambda = 3.0;
    const double rho = std::sqrt(0.8 / lambda);
    const WarpedProfile prof = nariai_profile(lambda, rho);
    const CurvatureComponents c = curvature_components(prof, 0.4);
    CHECK(c.ric_normal == doctest::Approx(0.0));
    CHECK(c.ric_tangential == doctest::Approx(1.0 / (rho * rho)).epsilon(1e-12));
    CHECK(c.scalar == doctest::Approx(2.0 / (rho * rho)).epsilon(1e-12));
  }
  SUBCASE("round de Sitter slice has R = 2 Lambda") {
    const double lambda = 3.0;
    const WarpedProfile prof = de_sitter_profile(lambda);
    for (double frac : {0.2, 0.5, 0.8}) {
      const CurvatureComponents c = curvature_components(prof, frac * prof.length());
      CHECK(c.scalar == doctest::Approx(2.0 * lambda).epsilon(1e-9));
    }
  }
  SUBCASE("generic profile satisfies R = 2 Lambda + 2 Q^2 / v^4 mid-slice") {
    const WarpedProfile& prof = generic_full();
    const double s = 0.5 * prof.half_period();
    const CurvatureComponents c = curvature_components(prof, s);
    const double v = prof.radius(s);
    const double expected = 2.0 * kGeneric.lambda + 2.0 * kGeneric.Q * kGeneric.Q /
                            (v * v * v * v);
    CHECK(c.scalar == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("field equation residuals vanish on the closed forms") {
  const double lambda = 3.0;
  SUBCASE("Nariai") {
    const WarpedProfile prof = nariai_profile(lambda, std::sqrt(0.75 / lambda));
    const ResidualReport rep = system_residuals(prof);
    CHECK(rep.worst() <= 1e-10);
  }
  SUBCASE("cold black hole") {
    const WarpedProfile prof = cold_profile(lambda, std::sqrt(0.25 / lambda));
    CHECK(system_residuals(prof).worst() <= 1e-10);
  }
  SUBCASE("ultra cold") {
    const WarpedProfile prof = ultracold_profile(lambda);
    CHECK(system_residuals(prof).worst() <= 1e-12);
  }
  SUBCASE("de Sitter") {
    const WarpedProfile prof = de_sitter_profile(lambda);
    CHECK(system_residuals(prof).worst() <= 1e-10);
  }
}

TEST_CASE("numeric profile residuals track the ODE tolerance") {
  const ResidualReport rep = system_residuals(generic_full());
  CHECK(rep.worst() <= 1e-7);

  const WarpedProfile tight = periodic_profile(integrate_half_profile(kGeneric, 1e-12));
  const ResidualReport rep_tight = system_residuals(tight);
  CHECK(rep_tight.worst() <= rep.worst());
}

TEST_CASE("scalar identity is controlled by the equation defects") {
  for (const WarpedProfile* prof :
       {&generic_full()}) {
    const ResidualReport rep = system_residuals(*prof);
    CHECK(rep.scalar_identity_residual <=
          10.0 * (rep.hessian_residual + rep.trace_residual) + 1e-12);
  }
}

TEST_CASE("dyonic configurations satisfy the electrovacuum equations") {
  // Splitting the source between electric and magnetic charge leaves the
  // geometry keyed to Q^2 + P^2 untouched; the residuals see both fields.
  const ModelParams dyonic{.m = 0.10, .Q = 0.08 * 0.6, .lambda = 3.0, .P = 0.08 * 0.8};
  const WarpedProfile prof = periodic_profile(integrate_half_profile(dyonic));
  CHECK(prof.radius(prof.half_period()) ==
        doctest::Approx(generic_full().radius(generic_full().half_period()))
            .epsilon(1e-9));
  const ResidualReport rep = system_residuals(prof);
  CHECK(rep.worst() <= 1e-7);
  CHECK(rep.scalar_identity_residual <= 1e-9);
  const double s = 0.4 * prof.half_period();
  CHECK(prof.b_radial(s) == doctest::Approx(dyonic.P / std::pow(prof.radius(s), 2)));
}

TEST_CASE("slice geometry and the totally geodesic horizons") {
  const WarpedProfile& prof = generic_full();
  const double a = prof.half_period();
  const RootProfile roots = horizon_roots(kGeneric);

  SUBCASE("cosmological horizon slice") {
    const SliceSurface slice = slice_geometry(prof, a);
    CHECK(slice.mean_curvature == doctest::Approx(0.0));
    CHECK(slice.second_fundamental_norm2 == doctest::Approx(0.0));
    CHECK(slice.area == doctest::Approx(4.0 * kPi * roots.r_cosmological() *
                                        roots.r_cosmological())
                            .epsilon(1e-8));
    CHECK(slice.minimal);
    CHECK(slice.totally_geodesic);
  }
  SUBCASE("interior slice expands along +ds") {
    const SliceSurface slice = slice_geometry(prof, 0.5 * a);
    CHECK(slice.mean_curvature > 0.0);
    CHECK_FALSE(slice.minimal);
    CHECK(slice.gauss_curvature ==
          doctest::Approx(1.0 / (slice.radius * slice.radius)));
    // H = 0 iff |A| = 0 for umbilic coordinate slices; both nonzero here.
    CHECK(slice.second_fundamental_norm2 > 0.0);
    // Orientation flips the sign of H.
    CHECK(slice_geometry(prof, 0.5 * a, -1).mean_curvature ==
          doctest::Approx(-slice.mean_curvature));
  }
  SUBCASE("Nariai slices are all minimal") {
    const WarpedProfile cyl = nariai_profile(3.0, std::sqrt(0.8 / 3.0));
    for (double frac : {0.1, 0.4, 0.9}) {
      const SliceSurface slice = slice_geometry(cyl, frac * cyl.length());
      CHECK(slice.mean_curvature == 0.0);
      CHECK(slice.area == doctest::Approx(4.0 * kPi * 0.8 / 3.0).epsilon(1e-12));
    }
  }
  SUBCASE("zero potential forces totally geodesic slices") {
    for (double h : prof.horizons()) {
      if (std::abs(prof.potential(h)) <= 1e-10) {
        const SliceSurface slice = slice_geometry(prof, h);
        CHECK(std::sqrt(slice.second_fundamental_norm2) <= 1e-8);
      }
    }
  }
}
