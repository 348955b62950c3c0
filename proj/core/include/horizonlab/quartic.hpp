#pragma once

#include <array>
#include <complex>

namespace horizonlab {

struct QuarticRoots {
  std::array<std::complex<double>, 4> roots{};
  double max_rel_residual = 0.0;  // worst |p(z)| / sum|c_k z^k| over the roots
};

// All four roots of c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0, c4 != 0.
// Durand-Kerner on the monic polynomial, then Newton polishing of the real
// roots; closed forms are avoided because double roots near the degenerate
// parameter curves make them ill-conditioned.
QuarticRoots solve_quartic(double c4, double c3, double c2, double c1, double c0);

// Relative backward-error style residual of z as a root.
double quartic_residual(double c4, double c3, double c2, double c1, double c0,
                        std::complex<double> z);

}  // namespace horizonlab
