#include "horizonlab/ode.hpp"

#include <algorithm>
#include <cmath>

#include "horizonlab/errors.hpp"

namespace horizonlab {

namespace {

// Dormand-Prince coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// Error coefficients: b - b_hat.
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

template <int N>
bool RungeKutta<N>::advance_to(
    OdeState<N>& state, double t_target,
    const std::function<bool(const OdeState<N>&, const OdeState<N>&)>& on_step) {
  using V = std::array<double, N>;
  const double direction = (t_target >= state.t) ? 1.0 : -1.0;
  if (state.t == t_target) return true;

  V k1 = state.dy;
  rhs_(state.t, state.y, k1);
  state.dy = k1;

  double h = std::min(opt_.h_init, std::abs(t_target - state.t)) * direction;

  while (direction * (t_target - state.t) > 0.0) {
    if (++steps_ > opt_.max_steps)
      throw Error("ode: step budget exhausted");
    if (opt_.h_max > 0.0) h = direction * std::min(std::abs(h), opt_.h_max);
    if (std::abs(h) > std::abs(t_target - state.t)) h = t_target - state.t;
    if (std::abs(h) < opt_.h_min) h = opt_.h_min * direction;

    V y2, y3, y4, y5, y6, y7;
    V k2, k3, k4, k5, k6, k7;
    const V& y = state.y;
    for (int i = 0; i < N; ++i) y2[i] = y[i] + h * a21 * k1[i];
    rhs_(state.t + c2 * h, y2, k2);
    for (int i = 0; i < N; ++i) y3[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs_(state.t + c3 * h, y3, k3);
    for (int i = 0; i < N; ++i) y4[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs_(state.t + c4 * h, y4, k4);
    for (int i = 0; i < N; ++i)
      y5[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs_(state.t + c5 * h, y5, k5);
    for (int i = 0; i < N; ++i)
      y6[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    rhs_(state.t + h, y6, k6);
    for (int i = 0; i < N; ++i)
      y7[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    rhs_(state.t + h, y7, k7);

    double err = 0.0;
    for (int i = 0; i < N; ++i) {
      const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                             e7 * k7[i]);
      const double scale = opt_.atol + opt_.rtol * std::max(std::abs(y[i]), std::abs(y7[i]));
      err = std::max(err, std::abs(ei) / scale);
    }

    if (err <= 1.0 || std::abs(h) <= opt_.h_min * 1.000001) {
      OdeState<N> prev = state;
      state.t += h;
      state.y = y7;
      state.dy = k7;  // FSAL
      k1 = k7;
      if (on_step && !on_step(prev, state)) return false;
    }

    const double safety = 0.9;
    double factor = (err > 0.0) ? safety * std::pow(err, -0.2) : 5.0;
    factor = std::clamp(factor, 0.2, 5.0);
    h *= factor;
  }
  return true;
}

template <int N>
OdeState<N> RungeKutta<N>::interpolate(const OdeState<N>& a, const OdeState<N>& b, double t) {
  const double h = b.t - a.t;
  OdeState<N> out;
  out.t = t;
  if (std::abs(h) < 1e-300) {
    out.y = a.y;
    out.dy = a.dy;
    return out;
  }
  const double u = (t - a.t) / h;
  const double h00 = (1 + 2 * u) * (1 - u) * (1 - u);
  const double h10 = u * (1 - u) * (1 - u);
  const double h01 = u * u * (3 - 2 * u);
  const double h11 = u * u * (u - 1);
  const double g00 = 6 * u * (u - 1) / h;
  const double g10 = (1 - u) * (1 - 3 * u);
  const double g01 = -6 * u * (u - 1) / h;
  const double g11 = u * (3 * u - 2);
  for (int i = 0; i < N; ++i) {
    out.y[i] = h00 * a.y[i] + h10 * h * a.dy[i] + h01 * b.y[i] + h11 * h * b.dy[i];
    out.dy[i] = g00 * a.y[i] + g10 * a.dy[i] + g01 * b.y[i] + g11 * b.dy[i];
  }
  return out;
}

template class RungeKutta<1>;
template class RungeKutta<2>;

}  // namespace horizonlab
