#include <cmath>

#include "doctest.h"
#include "horizonlab/errors.hpp"
#include "horizonlab/models.hpp"
#include "horizonlab/profile.hpp"

using namespace horizonlab;

namespace {

const ModelParams kGeneric{.m = 0.10, .Q = 0.08, .lambda = 3.0};
const ModelParams kUncharged{.m = 0.05, .Q = 0.0, .lambda = 3.0};

const WarpedProfile& generic_half() {
  static const WarpedProfile half = integrate_half_profile(kGeneric);
  return half;
}

const WarpedProfile& generic_full() {
  static const WarpedProfile full = periodic_profile(generic_half());
  return full;
}

}  // namespace

TEST_CASE("half profile hits both horizons with a conserved first integral") {
  const RootProfile roots = horizon_roots(kGeneric);
  const WarpedProfile& half = generic_half();

  CHECK(half.radius(0.0) == doctest::Approx(roots.r_plus()).epsilon(1e-12));
  CHECK(half.radius(half.length()) == doctest::Approx(roots.r_cosmological()).epsilon(1e-9));
  CHECK(half.radius_deriv(0.0) == 0.0);
  CHECK(std::abs(half.radius_deriv(half.length())) <= 1e-14);

  // u''(0) = g(r_+) > 0: the radius leaves the inner horizon growing.
  CHECK(half.radius_accel(0.0) > 0.0);
  CHECK(half.radius_accel(0.0) ==
        doctest::Approx(radial_accel(kGeneric, roots.r_plus())).epsilon(1e-12));

  CHECK(half.first_integral_drift() <= 1e-10);
}

TEST_CASE("reflection closes the period exactly on the grid") {
  const WarpedProfile& full = generic_full();
  const double a = full.half_period();
  REQUIRE(full.periodic());
  CHECK(full.length() == doctest::Approx(2.0 * a));

  const auto& grid = full.grid();
  const auto& v = full.radius_samples();
  const size_t n = grid.size() - 1;
  for (size_t i = 0; i <= n; ++i) {
    CHECK(v[i] == v[n - i]);  // v(2a - s) = v(s), bitwise by construction
  }
  CHECK(full.radius(2.0 * a) == doctest::Approx(full.radius(0.0)));
  CHECK(full.radius(0.0) == doctest::Approx(horizon_roots(kGeneric).r_plus()).epsilon(1e-12));

  // |V(v(s))| is even about a; the signed potential flips orientation.
  for (double x : {0.1 * a, 0.3 * a, 0.7 * a}) {
    CHECK(std::abs(full.potential(a + x)) ==
          doctest::Approx(std::abs(full.potential(a - x))).epsilon(1e-9));
    CHECK(full.potential(a + x) * full.potential(a - x) < 0.0);
  }
}

TEST_CASE("first integral conservation on the periodic grid") {
  const WarpedProfile& full = generic_full();
  double worst = 0.0;
  for (double s : full.grid()) {
    const double dv = full.radius_deriv(s);
    worst = std::max(worst, std::abs(dv * dv - potential_squared(kGeneric, full.radius(s))));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("arc length quadrature agrees with the ODE clock") {
  const RootProfile roots = horizon_roots(kUncharged);
  const WarpedProfile half = integrate_half_profile(kUncharged);

  // r -> r_+ gives s -> 0.
  CHECK(arc_length(kUncharged, roots.r_plus()) == doctest::Approx(0.0).epsilon(1e-12));

  // Midpoint value agrees with the inverse of the ODE radius map.
  const double r_mid = 0.5 * (roots.r_plus() + roots.r_cosmological());
  const double s_quad = arc_length(kUncharged, r_mid);
  // Invert the monotone radius table by bisection.
  double lo = 0.0, hi = half.length();
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (half.radius(mid) < r_mid ? lo : hi) = mid;
  }
  CHECK(s_quad == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-9));

  // The full sweep reproduces the half period.
  CHECK(arc_length(kUncharged, roots.r_cosmological()) ==
        doctest::Approx(half.length()).epsilon(1e-9));
}

TEST_CASE("reparametrization consistency at interior probes") {
  const WarpedProfile& half = generic_half();
  const double a = half.length();
  for (int i = 1; i <= 20; ++i) {
    const double s = a * i / 21.0;
    CHECK(arc_length(kGeneric, half.radius(s)) == doctest::Approx(s).epsilon(1e-8));
  }
}

TEST_CASE("smooth gluing: odd orders vanish, even orders match") {
  const WarpedProfile& full = generic_full();
  const GluingReport report = check_smooth_gluing(full, 5);
  REQUIRE(report.orders.size() == 5);
  CHECK(report.all_pass);

  const RootProfile roots = horizon_roots(kGeneric);
  const double g_rc = radial_accel(kGeneric, roots.r_cosmological());

  // Order 1: |v'(a)| = |V(r_c)| = 0.
  CHECK(report.orders[0].odd_at_half <= 1e-8);
  CHECK(report.orders[0].odd_at_zero <= 1e-8);
  // Order 2: both one-sided second derivatives equal g(r_c).
  CHECK(report.orders[1].left_at_half == doctest::Approx(g_rc).epsilon(1e-5));
  CHECK(report.orders[1].right_at_half == doctest::Approx(g_rc).epsilon(1e-5));
  // Order 3 vanishes within its band.
  CHECK(report.orders[2].odd_at_half <= tol_glue(3));
}

TEST_CASE("near the Nariai curve the half period approaches pi / alpha") {
  const double lambda = 3.0;
  const double rho = std::sqrt(0.7 / lambda);
  const double q = std::sqrt(double_root_charge_sq(lambda, rho));
  const double m_curve = double_root_mass(lambda, rho);
  // Step 1e-3 off the curve in the dimensionless mass coordinate.
  const double m2l = m_curve * m_curve * lambda - 1e-3;
  const ModelParams p{.m = std::sqrt(m2l / lambda), .Q = q, .lambda = lambda};
  REQUIRE(classify_regime(p).kind == Regime::RNdSGeneric);

  const auto [rho_cold, rho_nariai] = critical_radii(p);
  const double alpha = std::sqrt(lambda - q * q / std::pow(rho_nariai, 4));
  const WarpedProfile half = integrate_half_profile(p);
  CHECK(std::abs(half.length() * alpha - kPi) <= 0.05 * kPi);
  (void)rho_cold;
}

TEST_CASE("closed-form profiles expose the product geometry") {
  const double lambda = 3.0;
  SUBCASE("charged Nariai") {
    const double rho = std::sqrt(0.8 / lambda);
    const WarpedProfile prof = nariai_profile(lambda, rho);
    CHECK(prof.periodic());
    CHECK(prof.radius(0.3) == rho);
    CHECK(prof.radius_deriv(0.3) == 0.0);
    const double alpha = prof.regime().alpha_or_beta;
    CHECK(prof.half_period() == doctest::Approx(kPi / alpha));
    CHECK(prof.potential(0.25) == doctest::Approx(std::sin(alpha * 0.25)));
    CHECK(prof.e_radial(0.1) ==
          doctest::Approx(prof.params().Q / (rho * rho)).epsilon(1e-14));
    CHECK(prof.first_integral_drift() <= 1e-14);
  }
  SUBCASE("cold black hole") {
    const double rho = std::sqrt(0.3 / lambda);
    const WarpedProfile prof = cold_profile(lambda, rho);
    CHECK_FALSE(prof.periodic());
    const double beta = prof.regime().alpha_or_beta;
    CHECK(beta > 0.0);
    CHECK(prof.potential(0.2) == doctest::Approx(std::sinh(beta * 0.2)));
    CHECK(prof.horizons() == std::vector<double>{0.0});
  }
  SUBCASE("ultra cold") {
    const WarpedProfile prof = ultracold_profile(lambda);
    CHECK(prof.radius(0.1) == doctest::Approx(1.0 / std::sqrt(2.0 * lambda)));
    CHECK(prof.potential(0.37) == doctest::Approx(0.37));
    CHECK(prof.potential_deriv(0.37) == 1.0);
    CHECK(prof.e_radial(0.2) == doctest::Approx(std::sqrt(lambda)).epsilon(1e-14));
  }
  SUBCASE("de Sitter round slice") {
    const WarpedProfile prof = de_sitter_profile(lambda);
    const double radius = std::sqrt(3.0 / lambda);
    CHECK(prof.length() == doctest::Approx(kPi * radius));
    CHECK(prof.radius(prof.half_period()) == doctest::Approx(radius).epsilon(1e-12));
    CHECK(prof.potential(prof.half_period()) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(prof.poles().size() == 2);
    CHECK(prof.first_integral_drift() <= 1e-12);
  }
}

TEST_CASE("build_profile dispatches by regime") {
  CHECK(build_profile(kGeneric).kind() == ProfileKind::RnDSNumeric);
  CHECK(build_profile({.m = 0, .Q = 0, .lambda = 3.0}).kind() == ProfileKind::DeSitter);
  const double lambda = 1.0;
  const ModelParams uc{.m = std::sqrt(2.0) / 3.0, .Q = 0.5, .lambda = lambda};
  CHECK(build_profile(uc).kind() == ProfileKind::UltraCold);
  CHECK_THROWS(build_profile({.m = 0.5, .Q = 0.08, .lambda = 3.0}));
}

TEST_CASE("non-periodic profiles reject out-of-domain evaluation") {
  const WarpedProfile prof = ultracold_profile(2.0);
  CHECK_THROWS_AS(prof.radius(prof.length() + 0.5), OutOfDomain);
  CHECK_THROWS_AS(prof.radius(-0.5), OutOfDomain);
  // Periodic profiles fold instead.
  const WarpedProfile& full = generic_full();
  CHECK(full.radius(-0.25) == doctest::Approx(full.radius(full.length() - 0.25)));
}

TEST_CASE("tightening the ODE tolerance tightens the drift") {
  const WarpedProfile loose = integrate_half_profile(kGeneric, 1e-8);
  const WarpedProfile tight = integrate_half_profile(kGeneric, 1e-12);
  CHECK(tight.first_integral_drift() < loose.first_integral_drift());
  CHECK(tight.first_integral_drift() <= 1e-12);
}
