#pragma once

#include <array>
#include <functional>
#include <vector>

namespace horizonlab {

// Small fixed-dimension adaptive Runge-Kutta (Dormand-Prince 5(4)).
// Geared to the handful of one- and two-dimensional autonomous systems this
// library integrates; dense output is cubic Hermite on the accepted steps.

template <int N>
struct OdeState {
  double t = 0.0;
  std::array<double, N> y{};
  std::array<double, N> dy{};
};

struct OdeOptions {
  double rtol = 1e-12;
  double atol = 1e-13;
  double h_init = 1e-4;
  double h_min = 1e-14;
  double h_max = 0.0;  // 0 = unrestricted
  int max_steps = 2'000'000;
};

template <int N>
class RungeKutta {
 public:
  using Rhs = std::function<void(double, const std::array<double, N>&, std::array<double, N>&)>;

  RungeKutta(Rhs rhs, OdeOptions options) : rhs_(std::move(rhs)), opt_(options) {}

  // Advances from `state` to exactly t_target; `on_step` (optional) sees every
  // accepted step and may stop the integration by returning false.
  bool advance_to(OdeState<N>& state, double t_target,
                  const std::function<bool(const OdeState<N>&, const OdeState<N>&)>& on_step = {});

  // Hermite interpolation between two accepted step endpoints.
  static OdeState<N> interpolate(const OdeState<N>& a, const OdeState<N>& b, double t);

  int steps_taken() const { return steps_; }

 private:
  Rhs rhs_;
  OdeOptions opt_;
  int steps_ = 0;
};

extern template class RungeKutta<1>;
extern template class RungeKutta<2>;

}  // namespace horizonlab
