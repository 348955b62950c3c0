#include "horizonlab/quartic.hpp"

#include <algorithm>
#include <cmath>

#include "horizonlab/errors.hpp"

namespace horizonlab {

namespace {

using cd = std::complex<double>;

cd eval_monic(const std::array<double, 4>& a, cd z) {
  // z^4 + a3 z^3 + a2 z^2 + a1 z + a0
  return (((z + a[3]) * z + a[2]) * z + a[1]) * z + a[0];
}

cd eval_monic_deriv(const std::array<double, 4>& a, cd z) {
  return ((4.0 * z + 3.0 * a[3]) * z + 2.0 * a[2]) * z + a[1];
}

}  // namespace

double quartic_residual(double c4, double c3, double c2, double c1, double c0, cd z) {
  const cd p = (((c4 * z + c3) * z + c2) * z + c1) * z + c0;
  const double az = std::max(1.0, std::abs(z));
  // Backward-error scale against the coefficient size; the termwise sum
  // degenerates at roots near the origin when the low coefficients vanish.
  const double coeff =
      std::abs(c4) + std::abs(c3) + std::abs(c2) + std::abs(c1) + std::abs(c0);
  return std::abs(p) / std::max(coeff * az * az * az * az, 1e-300);
}

QuarticRoots solve_quartic(double c4, double c3, double c2, double c1, double c0) {
  if (c4 == 0.0) throw Error("solve_quartic: leading coefficient is zero");
  const std::array<double, 4> a = {c0 / c4, c1 / c4, c2 / c4, c3 / c4};

  // Cauchy bound on the root magnitudes.
  const double radius =
      1.0 + std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2]), std::abs(a[3])});

  // Durand-Kerner from a non-symmetric starting configuration.
  std::array<cd, 4> z;
  const cd seed(0.4, 0.9);
  z[0] = seed * radius * 0.5;
  for (int i = 1; i < 4; ++i) z[i] = z[i - 1] * seed;

  for (int iter = 0; iter < 500; ++iter) {
    double shift = 0.0;
    for (int i = 0; i < 4; ++i) {
      cd denom(1.0, 0.0);
      for (int j = 0; j < 4; ++j)
        if (j != i) denom *= (z[i] - z[j]);
      if (std::abs(denom) < 1e-300) denom = cd(1e-300, 0.0);
      const cd dz = eval_monic(a, z[i]) / denom;
      z[i] -= dz;
      shift = std::max(shift, std::abs(dz));
    }
    if (shift < 1e-15 * radius) break;
  }

  // Snap near-real roots to the axis and polish them with Newton; a guard on
  // the derivative keeps multiple roots where Durand-Kerner left them.
  for (auto& root : z) {
    if (std::abs(root.imag()) < 1e-8 * (1.0 + std::abs(root.real()))) {
      double x = root.real();
      for (int it = 0; it < 50; ++it) {
        const cd p = eval_monic(a, cd(x, 0.0));
        const cd dp = eval_monic_deriv(a, cd(x, 0.0));
        if (std::abs(dp) < 1e-10 * radius * radius * radius) break;
        const double step = p.real() / dp.real();
        x -= step;
        if (std::abs(step) < 1e-17 * (1.0 + std::abs(x))) break;
      }
      root = cd(x, 0.0);
    }
  }

  std::sort(z.begin(), z.end(), [](cd lhs, cd rhs) {
    if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
    return lhs.imag() < rhs.imag();
  });

  QuarticRoots out;
  out.roots = z;
  for (const auto& root : z)
    out.max_rel_residual = std::max(out.max_rel_residual, quartic_residual(c4, c3, c2, c1, c0, root));
  return out;
}

}  // namespace horizonlab
