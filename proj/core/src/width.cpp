#include "horizonlab/width.hpp"

#include <algorithm>
#include <cmath>

#include "horizonlab/errors.hpp"
#include "horizonlab/numerics.hpp"
#include "horizonlab/spectral.hpp"

namespace horizonlab {

SweepoutEval sweepout_value(const WarpedProfile& profile, double rel_tol) {
  SweepoutEval out;
  const auto& v = profile.radius_samples();
  const auto& s = profile.grid();
  size_t arg = 0;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] > v[arg]) arg = i;
  out.argmax_s = s[arg];
  out.max_area = 4.0 * kPi * v[arg] * v[arg];

  // Plateau detection: a second near-maximal sample away from the argmax.
  const double band = std::max(rel_tol, 1e-12) * out.max_area;
  const double sep = 8.0 * (s[1] - s[0]);
  for (size_t i = 0; i < v.size(); ++i) {
    if (std::abs(s[i] - out.argmax_s) > sep &&
        std::abs(4.0 * kPi * v[i] * v[i] - out.max_area) <= band) {
      out.plateau = true;
      break;
    }
  }

  double widest = 0.0;
  for (double h : profile.horizons()) widest = std::max(widest, profile.radius(h));
  out.horizon_area = 4.0 * kPi * widest * widest;

  out.index_at_max = jacobi_spectrum(profile.params(), v[arg]).index;
  out.matches_theorem =
      std::abs(out.max_area - out.horizon_area) <= rel_tol * out.horizon_area &&
      out.index_at_max == 1;
  return out;
}

double tol_probe(double epsilon, double reference_area) {
  return reference_area * std::max(epsilon * epsilon * epsilon, 1e-9);
}

namespace {

// Area of the graph s = sigma + eps P_l(cos theta) over the slice family
// parameter sigma: 2 pi int v sqrt(v^2 + eps^2 (1-x^2) P_l'(x)^2) dx.
double graph_area(const WarpedProfile& profile, double sigma, double eps, int l,
                  int theta_nodes) {
  auto integrand = [&](double x) {
    const double s = sigma + eps * legendre_p(l, x);
    const double v = profile.radius(s);
    const double dp = legendre_p_deriv(l, x);
    const double slope2 = eps * eps * (1.0 - x * x) * dp * dp;
    return v * std::sqrt(v * v + slope2);
  };
  return 2.0 * kPi * integrate_gauss(integrand, -1.0, 1.0, theta_nodes);
}

}  // namespace

ProbeResult perturbation_probe(const WarpedProfile& profile,
                               std::span<const PerturbationFamily> families,
                               int sigma_samples, int theta_nodes) {
  ProbeResult out;
  const SweepoutEval base = sweepout_value(profile);
  out.reference = base.max_area;
  out.min_max_area = base.max_area;

  const double L = profile.length();
  double max_eps = 0.0;
  for (const auto& fam : families) {
    // Graph condition: the perturbed surface must stay a graph within the
    // fundamental domain.
    if (std::abs(fam.epsilon) > 0.25 * L)
      throw EmbeddingLost("perturbation_probe: amplitude too large for the domain");
    max_eps = std::max(max_eps, std::abs(fam.epsilon));

    double family_max = 0.0;
    double best_sigma = 0.0;
    double ds = L / sigma_samples;
    for (int i = 0; i <= sigma_samples; ++i) {
      const double sigma = profile.periodic()
                               ? i * ds
                               : std::clamp(i * ds, std::abs(fam.epsilon),
                                            L - std::abs(fam.epsilon));
      const double area = graph_area(profile, sigma, fam.epsilon, fam.harmonic_degree,
                                     theta_nodes);
      if (area > family_max) {
        family_max = area;
        best_sigma = sigma;
      }
    }
    // Parabolic refinement around the best grid sigma.
    for (int pass = 0; pass < 3; ++pass) {
      ds *= 0.25;
      for (int j = -3; j <= 3; ++j) {
        const double sigma = best_sigma + j * ds;
        if (!profile.periodic() &&
            (sigma < std::abs(fam.epsilon) || sigma > L - std::abs(fam.epsilon)))
          continue;
        const double area =
            graph_area(profile, sigma, fam.epsilon, fam.harmonic_degree, theta_nodes);
        if (area > family_max) {
          family_max = area;
          best_sigma = sigma;
        }
      }
    }
    out.family_maxima.push_back(family_max);
    out.min_max_area = std::min(out.min_max_area, family_max);
  }

  out.tol_probe = tol_probe(max_eps, out.reference);
  out.holds = out.min_max_area >= out.reference - out.tol_probe;
  return out;
}

}  // namespace horizonlab
