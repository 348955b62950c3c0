#include <cmath>
#include <random>

#include "doctest.h"
#include "horizonlab/errors.hpp"
#include "horizonlab/models.hpp"
#include "horizonlab/profile.hpp"
#include "horizonlab/width.hpp"

using namespace horizonlab;

namespace {

const ModelParams kUncharged{.m = 0.05, .Q = 0.0, .lambda = 3.0};

const WarpedProfile& uncharged_full() {
  static const WarpedProfile full = periodic_profile(integrate_half_profile(kUncharged));
  return full;
}

}  // namespace

TEST_CASE("sweepout maximum is the cosmological horizon with index one") {
  const WarpedProfile& prof = uncharged_full();
  const SweepoutEval eval = sweepout_value(prof);
  const RootProfile roots = horizon_roots(kUncharged);
  const double rc = roots.r_cosmological();
  CHECK(eval.argmax_s == doctest::Approx(prof.half_period()).epsilon(1e-9));
  CHECK(eval.max_area == doctest::Approx(4.0 * kPi * rc * rc).epsilon(1e-9));
  CHECK(eval.index_at_max == 1);
  CHECK(eval.matches_theorem);
  CHECK_FALSE(eval.plateau);
}

TEST_CASE("round sphere width is 12 pi / Lambda") {
  const WarpedProfile ds = de_sitter_profile(3.0);
  const SweepoutEval eval = sweepout_value(ds);
  CHECK(eval.max_area == doctest::Approx(4.0 * kPi).epsilon(1e-9));
  CHECK(eval.index_at_max == 1);
  CHECK(eval.matches_theorem);
}

TEST_CASE("product family sweepout plateaus") {
  const WarpedProfile cyl = nariai_profile(3.0, std::sqrt(0.8 / 3.0));
  const SweepoutEval eval = sweepout_value(cyl);
  CHECK(eval.max_area == doctest::Approx(4.0 * kPi * 0.8 / 3.0).epsilon(1e-12));
  CHECK(eval.plateau);
}

TEST_CASE("perturbation probe cannot undercut the sweepout value") {
  const WarpedProfile& prof = uncharged_full();
  const SweepoutEval base = sweepout_value(prof);

  SUBCASE("zero amplitude reduces to the sweepout value") {
    const PerturbationFamily none{0.0, 2};
    const ProbeResult probe = perturbation_probe(prof, std::span(&none, 1));
    CHECK(probe.min_max_area == doctest::Approx(base.max_area).epsilon(1e-12));
    CHECK(probe.holds);
  }
  SUBCASE("constant shifts only reparametrize the family") {
    const PerturbationFamily shift{1e-2, 0};
    const ProbeResult probe = perturbation_probe(prof, std::span(&shift, 1));
    CHECK(std::abs(probe.family_maxima[0] - base.max_area) <= 1e-8 * base.max_area);
  }
  SUBCASE("quadrupole graphs keep the maximum within the cubic band") {
    const PerturbationFamily quad{1e-2, 2};
    const ProbeResult probe = perturbation_probe(prof, std::span(&quad, 1));
    CHECK(probe.min_max_area >= base.max_area - 1e-4);
    CHECK(probe.holds);
  }
  SUBCASE("random families hold the probe bound") {
    std::mt19937 rng(99u);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::vector<PerturbationFamily> families;
    for (int i = 0; i < 12; ++i)
      families.push_back({1e-2 * u01(rng), static_cast<int>(u01(rng) * 5)});
    const ProbeResult probe = perturbation_probe(prof, families);
    CHECK(probe.holds);
  }
  SUBCASE("oversized amplitudes lose the graph property") {
    const PerturbationFamily huge{10.0, 1};
    CHECK_THROWS_AS(perturbation_probe(prof, std::span(&huge, 1)), EmbeddingLost);
  }
}
