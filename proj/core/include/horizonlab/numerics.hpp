#pragma once

#include <functional>
#include <span>
#include <vector>

namespace horizonlab {

// Gauss-Legendre nodes and weights on [-1, 1], cached per order.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussRule& gauss_legendre(int n);

double integrate_gauss(const std::function<double(double)>& f, double a, double b, int n);

// Composite Simpson with `intervals` (forced even) panels.
double integrate_simpson(const std::function<double(double)>& f, double a, double b,
                         int intervals);

// Fornberg weights: w[i] such that sum_i w[i] f(x[i]) approximates the
// `order`-th derivative of f at x0.
std::vector<double> fd_weights(std::span<const double> x, double x0, int order);

// Legendre polynomial P_l and its derivative in x = cos(theta).
double legendre_p(int l, double x);
double legendre_p_deriv(int l, double x);

// Root bracketing refinement; f(lo) and f(hi) must have opposite signs.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol,
              int max_iter = 200);

}  // namespace horizonlab
