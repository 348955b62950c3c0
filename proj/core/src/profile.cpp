#include "horizonlab/profile.hpp"

#include <algorithm>
#include <cmath>

#include "horizonlab/errors.hpp"
#include "horizonlab/models.hpp"
#include "horizonlab/numerics.hpp"
#include "horizonlab/ode.hpp"

namespace horizonlab {

std::string to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::RnDSNumeric: return "RnDSNumeric";
    case ProfileKind::Nariai: return "Nariai";
    case ProfileKind::ColdBlackHole: return "ColdBlackHole";
    case ProfileKind::UltraCold: return "UltraCold";
    case ProfileKind::DeSitter: return "DeSitter";
  }
  return "?";
}

double WarpedProfile::fold(double s) const {
  if (periodic_) {
    double f = std::fmod(s, length_);
    if (f < 0.0) f += length_;
    return f;
  }
  const double slack = 1e-9 * std::max(1.0, length_);
  if (s < -slack || s > length_ + slack)
    throw OutOfDomain("profile evaluated outside [0, " + std::to_string(length_) + "]");
  return std::clamp(s, 0.0, length_);
}

double WarpedProfile::interp(const std::vector<double>& value,
                             const std::vector<double>& slope, double s) const {
  const double sf = fold(s);
  const int n = static_cast<int>(value.size());
  int i = static_cast<int>(sf / ds_);
  i = std::clamp(i, 0, n - 2);
  const double u = (sf - i * ds_) / ds_;
  const double h = ds_;
  const double h00 = (1 + 2 * u) * (1 - u) * (1 - u);
  const double h10 = u * (1 - u) * (1 - u);
  const double h01 = u * u * (3 - 2 * u);
  const double h11 = u * u * (u - 1);
  return h00 * value[i] + h10 * h * slope[i] + h01 * value[i + 1] + h11 * h * slope[i + 1];
}

double WarpedProfile::radius(double s) const { return interp(v_, dv_, s); }

double WarpedProfile::radius_deriv(double s) const { return interp(dv_, d2v_, s); }

double WarpedProfile::radius_accel(double s) const {
  return radial_accel(params_, radius(s));
}

double WarpedProfile::potential(double s) const {
  switch (kind_) {
    case ProfileKind::Nariai: return std::sin(alpha_or_beta_ * fold(s));
    case ProfileKind::ColdBlackHole: return std::sinh(alpha_or_beta_ * fold(s));
    case ProfileKind::UltraCold: return fold(s);
    default: return radius_deriv(s);
  }
}

double WarpedProfile::potential_deriv(double s) const {
  const double w = alpha_or_beta_;
  switch (kind_) {
    case ProfileKind::Nariai: return w * std::cos(w * fold(s));
    case ProfileKind::ColdBlackHole: return w * std::cosh(w * fold(s));
    case ProfileKind::UltraCold: return 1.0;
    default: return radial_accel(params_, radius(s));
  }
}

double WarpedProfile::potential_second(double s) const {
  const double w = alpha_or_beta_;
  switch (kind_) {
    case ProfileKind::Nariai: return -w * w * std::sin(w * fold(s));
    case ProfileKind::ColdBlackHole: return w * w * std::sinh(w * fold(s));
    case ProfileKind::UltraCold: return 0.0;
    default: return radial_accel_deriv(params_, radius(s)) * radius_deriv(s);
  }
}

double WarpedProfile::e_radial(double s) const {
  if (params_.Q == 0.0) return 0.0;
  const double v = radius(s);
  return params_.Q / (v * v);
}

double WarpedProfile::b_radial(double s) const {
  if (params_.P == 0.0) return 0.0;
  const double v = radius(s);
  return params_.P / (v * v);
}

std::vector<double> WarpedProfile::horizons() const {
  switch (kind_) {
    case ProfileKind::RnDSNumeric:
      if (half_) return {0.0, length_};
      return {0.0, half_period_, length_};
    case ProfileKind::Nariai: return {0.0, half_period_, length_};
    case ProfileKind::DeSitter: return {half_period_};
    case ProfileKind::ColdBlackHole:
    case ProfileKind::UltraCold: return {0.0};
  }
  return {};
}

std::vector<double> WarpedProfile::poles() const {
  if (kind_ == ProfileKind::DeSitter) return {0.0, length_};
  return {};
}

double WarpedProfile::first_integral_drift() const { return drift_; }

namespace detail {

void init_grid(WarpedProfile& p, int samples) {
  p.s_.resize(samples + 1);
  p.ds_ = p.length_ / samples;
  for (int i = 0; i <= samples; ++i) p.s_[i] = i * p.ds_;
}

}  // namespace detail

namespace {

using detail::init_grid;

double measure_drift(const ModelParams& params, const std::vector<double>& v,
                     const std::vector<double>& dv) {
  double drift = 0.0;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] <= 0.0) continue;  // de Sitter poles
    drift = std::max(drift, std::abs(dv[i] * dv[i] - potential_squared(params, v[i])));
  }
  return drift;
}

}  // namespace

namespace {

// Two-point quintic interpolation matching value, slope, and curvature at
// both step ends; one order above the integrator, so the dense fill does not
// degrade the node accuracy the tolerance paid for.
struct QuinticPiece {
  double s0 = 0.0, h = 0.0;
  double y0 = 0.0, d0 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0, c5 = 0.0;

  QuinticPiece() = default;
  QuinticPiece(double s_lo, double s_hi, double ylo, double dlo, double alo, double yhi,
               double dhi, double ahi)
      : s0(s_lo), h(s_hi - s_lo), y0(ylo), d0(dlo) {
    c2 = 0.5 * alo * h * h;
    const double A = yhi - ylo - dlo * h - c2;
    const double B = (dhi - dlo) * h - 2.0 * c2;
    const double C = (ahi - alo) * h * h;
    c3 = 10.0 * A - 4.0 * B + 0.5 * C;
    c4 = -15.0 * A + 7.0 * B - C;
    c5 = 6.0 * A - 3.0 * B + 0.5 * C;
  }

  double value(double s) const {
    const double u = (s - s0) / h;
    return y0 + u * (d0 * h + u * (c2 + u * (c3 + u * (c4 + u * c5))));
  }
  double slope(double s) const {
    const double u = (s - s0) / h;
    return (d0 * h + u * (2.0 * c2 + u * (3.0 * c3 + u * (4.0 * c4 + u * 5.0 * c5)))) / h;
  }
};

}  // namespace

WarpedProfile integrate_half_profile(const ModelParams& p, double tol_ode, int samples) {
  const RegimeClass rc = classify_regime(p);
  if (rc.kind != Regime::RNdSGeneric)
    throw Error("integrate_half_profile: parameters are not in the generic regime (" +
                to_string(rc.kind) + ")");
  const RootProfile roots = horizon_roots(p);
  const double r_plus = roots.r_plus();
  const double r_c = roots.r_cosmological();
  if (!(r_plus > 0.0) || !(r_c > r_plus))
    throw Error("integrate_half_profile: horizon radii unavailable");

  RungeKutta<2>::Rhs rhs = [p](double, const std::array<double, 2>& y,
                               std::array<double, 2>& dydt) {
    dydt[0] = y[1];
    dydt[1] = radial_accel(p, y[0]);
  };

  // The first-integral tolerance drives the step control.
  OdeOptions opt;
  opt.rtol = std::max(1e-14, tol_ode * 0.02);
  opt.atol = opt.rtol * 0.1;
  opt.h_init = 1e-6;
  opt.h_max = (r_c - r_plus) / 3.0;

  // Safety horizon for the event search: the arc length scales like the
  // half width of the potential well.
  const double r_mid = 0.5 * (r_plus + r_c);
  const double v_mid = std::sqrt(std::max(potential_squared(p, r_mid), 1e-300));
  const double s_horizon = 200.0 * (r_c - r_plus) / v_mid + 10.0 / std::sqrt(p.lambda);

  // Pass 1: locate the turning point u' = 0 with u near r_c. The bracketing
  // step is refined by bisection where every probe re-integrates from the
  // pre-event state, so the event position carries integrator accuracy.
  double event_s = -1.0;
  {
    RungeKutta<2> integrator(rhs, opt);
    OdeState<2> state;
    state.y = {r_plus, 0.0};
    bool armed = false;
    const double arm_level = 1e-3 * v_mid;
    OdeState<2> before_event;
    double bracket_hi = -1.0;
    auto watcher = [&](const OdeState<2>& a, const OdeState<2>& b) {
      if (!armed) {
        if (b.y[1] > arm_level) armed = true;
        return true;
      }
      if (b.y[1] <= 0.0) {
        before_event = a;
        bracket_hi = b.t;
        return false;
      }
      return true;
    };
    integrator.advance_to(state, s_horizon, watcher);
    if (bracket_hi < 0.0)
      throw EventNotFound("integrate_half_profile: turning point not reached by s = " +
                          std::to_string(s_horizon));
    auto slope_at = [&](double s) {
      if (s <= before_event.t) return before_event.y[1];
      RungeKutta<2> probe(rhs, opt);
      OdeState<2> st = before_event;
      probe.advance_to(st, s);
      return st.y[1];
    };
    event_s = bisect(slope_at, before_event.t, bracket_hi,
                     1e-16 * std::max(1.0, bracket_hi));
  }
  const double a = event_s;

  const int n_half = std::max(samples / 2, 16);
  WarpedProfile out;
  out.params_ = p;
  out.regime_ = rc;
  out.kind_ = ProfileKind::RnDSNumeric;
  out.periodic_ = false;
  out.half_ = true;
  out.length_ = a;
  out.half_period_ = a;
  init_grid(out, n_half);
  out.v_.assign(n_half + 1, 0.0);
  out.dv_.assign(n_half + 1, 0.0);

  // Pass 2: one free adaptive sweep to exactly s = a; every accepted step
  // fills the grid nodes it covers through the quintic dense output.
  {
    RungeKutta<2> sampler(rhs, opt);
    OdeState<2> st;
    st.y = {r_plus, 0.0};
    int next_node = 1;
    auto filler = [&](const OdeState<2>& lo, const OdeState<2>& hi) {
      const QuinticPiece piece(lo.t, hi.t, lo.y[0], lo.y[1], radial_accel(p, lo.y[0]),
                               hi.y[0], hi.y[1], radial_accel(p, hi.y[0]));
      while (next_node < n_half && out.s_[next_node] <= hi.t) {
        out.v_[next_node] = piece.value(out.s_[next_node]);
        out.dv_[next_node] = piece.slope(out.s_[next_node]);
        ++next_node;
      }
      return true;
    };
    sampler.advance_to(st, a, filler);
    out.v_[0] = r_plus;
    out.dv_[0] = 0.0;
    out.v_[n_half] = st.y[0];
    // The far endpoint is the turning point located above.
    out.dv_[n_half] = 0.0;
  }

  out.d2v_.resize(n_half + 1);
  for (int i = 0; i <= n_half; ++i) out.d2v_[i] = radial_accel(p, out.v_[i]);
  out.drift_ = measure_drift(p, out.v_, out.dv_);
  return out;
}

WarpedProfile periodic_profile(const WarpedProfile& half) {
  if (!half.half_) throw Error("periodic_profile: input is not a half profile");
  const int n_half = static_cast<int>(half.v_.size()) - 1;
  const double a = half.length_;
  if (std::abs(half.dv_.front()) > 1e-8 || std::abs(half.dv_.back()) > 1e-8)
    throw Error("periodic_profile: endpoints are not horizons");

  WarpedProfile out;
  out.params_ = half.params_;
  out.regime_ = half.regime_;
  out.kind_ = half.kind_;
  out.periodic_ = true;
  out.half_ = false;
  out.length_ = 2.0 * a;
  out.half_period_ = a;
  const int n = 2 * n_half;
  init_grid(out, n);
  out.v_.resize(n + 1);
  out.dv_.resize(n + 1);
  out.d2v_.resize(n + 1);
  for (int i = 0; i <= n_half; ++i) {
    out.v_[i] = half.v_[i];
    out.dv_[i] = half.dv_[i];
    out.d2v_[i] = half.d2v_[i];
  }
  // Reflection: v(2a - s) = v(s), exact on the grid.
  for (int i = n_half + 1; i <= n; ++i) {
    out.v_[i] = half.v_[n - i];
    out.dv_[i] = -half.dv_[n - i];
    out.d2v_[i] = half.d2v_[n - i];
  }
  out.drift_ = half.drift_;
  return out;
}

namespace detail {

WarpedProfile product_profile(double lambda, double rho, ProfileKind kind, int samples) {
  if (lambda <= 0.0) throw NonPositiveLambda("product profile requires Lambda > 0");
  const double q2 = double_root_charge_sq(lambda, rho);
  if (q2 < 0.0) throw Error("product profile: rho outside (0, 1/sqrt(Lambda))");

  WarpedProfile out;
  out.params_.m = double_root_mass(lambda, rho);
  out.params_.Q = std::sqrt(q2);
  out.params_.lambda = lambda;
  out.kind_ = kind;
  out.regime_.rho = rho;

  const double e2 = q2 / (rho * rho * rho * rho);
  switch (kind) {
    case ProfileKind::Nariai: {
      const double alpha2 = lambda - e2;
      if (alpha2 <= 0.0) throw Error("nariai_profile: rho^2 must exceed 1/(2 Lambda)");
      out.regime_.kind = Regime::Nariai;
      out.alpha_or_beta_ = std::sqrt(alpha2);
      out.regime_.alpha_or_beta = out.alpha_or_beta_;
      out.half_period_ = kPi / out.alpha_or_beta_;
      out.length_ = 2.0 * out.half_period_;
      out.periodic_ = true;
      break;
    }
    case ProfileKind::ColdBlackHole: {
      const double beta2 = e2 - lambda;
      if (beta2 <= 0.0) throw Error("cold_profile: rho^2 must be below 1/(2 Lambda)");
      out.regime_.kind = Regime::ColdBlackHole;
      out.alpha_or_beta_ = std::sqrt(beta2);
      out.regime_.alpha_or_beta = out.alpha_or_beta_;
      out.length_ = 3.0 / out.alpha_or_beta_;
      out.periodic_ = false;
      break;
    }
    case ProfileKind::UltraCold: {
      out.regime_.kind = Regime::UltraCold;
      out.alpha_or_beta_ = 0.0;
      out.regime_.alpha_or_beta = 0.0;
      out.length_ = 4.0 * rho;
      out.periodic_ = false;
      break;
    }
    default: throw Error("product_profile: unsupported kind");
  }

  init_grid(out, samples);
  out.v_.assign(samples + 1, rho);
  out.dv_.assign(samples + 1, 0.0);
  out.d2v_.assign(samples + 1, 0.0);
  out.drift_ = measure_drift(out.params_, out.v_, out.dv_);
  return out;
}

}  // namespace detail

WarpedProfile nariai_profile(double lambda, double rho, int samples) {
  return detail::product_profile(lambda, rho, ProfileKind::Nariai, samples);
}

WarpedProfile cold_profile(double lambda, double rho, int samples) {
  return detail::product_profile(lambda, rho, ProfileKind::ColdBlackHole, samples);
}

WarpedProfile ultracold_profile(double lambda, int samples) {
  const double rho = 1.0 / std::sqrt(2.0 * lambda);
  return detail::product_profile(lambda, rho, ProfileKind::UltraCold, samples);
}

WarpedProfile de_sitter_profile(double lambda, int samples) {
  if (lambda <= 0.0) throw NonPositiveLambda("de_sitter_profile requires Lambda > 0");
  WarpedProfile out;
  out.params_.lambda = lambda;
  out.kind_ = ProfileKind::DeSitter;
  out.regime_.kind = Regime::DeSitter;
  const double radius = std::sqrt(3.0 / lambda);
  out.half_period_ = 0.5 * kPi * radius;  // pole-to-equator arc
  out.length_ = kPi * radius;
  out.periodic_ = false;
  init_grid(out, samples);
  out.v_.resize(samples + 1);
  out.dv_.resize(samples + 1);
  out.d2v_.resize(samples + 1);
  for (int i = 0; i <= samples; ++i) {
    const double x = out.s_[i] / radius;
    out.v_[i] = radius * std::sin(x);
    out.dv_[i] = std::cos(x);
    out.d2v_[i] = -std::sin(x) / radius;  // g(v) = -L v / 3
  }
  out.v_.front() = 0.0;
  out.v_.back() = 0.0;
  out.drift_ = measure_drift(out.params_, out.v_, out.dv_);
  return out;
}

WarpedProfile build_profile(const ModelParams& p, double tol_ode, int samples) {
  const RegimeClass rc = classify_regime(p);
  switch (rc.kind) {
    case Regime::RNdSGeneric:
      return periodic_profile(integrate_half_profile(p, tol_ode, samples));
    case Regime::Nariai: return nariai_profile(p.lambda, rc.rho, samples);
    case Regime::ColdBlackHole: return cold_profile(p.lambda, rc.rho, samples);
    case Regime::UltraCold: return ultracold_profile(p.lambda, samples);
    case Regime::DeSitter: return de_sitter_profile(p.lambda, samples);
    case Regime::NoPhysicalHorizon:
      throw Error("build_profile: no physical horizon structure for these parameters");
  }
  throw Error("build_profile: unreachable");
}

double arc_length(const ModelParams& p, double r) {
  const RegimeClass rc = classify_regime(p);
  if (rc.kind != Regime::RNdSGeneric)
    throw Error("arc_length: parameters are not in the generic regime");
  const RootProfile roots = horizon_roots(p);
  const double r_plus = roots.r_plus();
  const double r_c = roots.r_cosmological();
  const double slack = 1e-12 * r_c;
  if (r < r_plus - slack || r > r_c + slack)
    throw OutOfDomain("arc_length: radius outside (r_+, r_c)");
  r = std::clamp(r, r_plus, r_c);

  auto speed = [&](double t) {
    return std::sqrt(std::max(potential_squared(p, t), 0.0));
  };
  const double r_mid = 0.5 * (r_plus + r_c);
  const int n = 96;

  // t = r_+ + xi^2 removes the square-root singularity at the inner end.
  auto from_inner = [&](double upper) {
    const double xi_max = std::sqrt(std::max(upper - r_plus, 0.0));
    if (xi_max == 0.0) return 0.0;
    return integrate_gauss([&](double xi) { return 2.0 * xi / speed(r_plus + xi * xi); },
                           0.0, xi_max, n);
  };
  // t = r_c - eta^2 at the outer end (integration runs downward in eta).
  auto from_outer = [&](double lower) {
    const double eta_max = std::sqrt(r_c - r_mid);
    const double eta_min = std::sqrt(std::max(r_c - lower, 0.0));
    if (eta_min >= eta_max) return 0.0;
    return integrate_gauss([&](double eta) { return 2.0 * eta / speed(r_c - eta * eta); },
                           eta_min, eta_max, n);
  };

  if (r <= r_mid) return from_inner(r);
  return from_inner(r_mid) + from_outer(r);
}

double tol_glue(int order) {
  // Normalized bands, calibrated on wedge-sampled profiles; certification
  // weakens with the order as finite-difference conditioning decays.
  static const double bands[] = {0.0, 1e-8, 1e-7, 3e-6, 3e-5, 3e-2, 1e-1, 1.0};
  if (order < 1) return 0.0;
  if (order > 7) return bands[7];
  return bands[order];
}

GluingReport check_smooth_gluing(const WarpedProfile& profile, int k_max) {
  if (k_max > 7) throw Error("check_smooth_gluing: conditioning limits k_max to 7");
  if (!profile.periodic())
    throw Error("check_smooth_gluing: requires a periodic profile");

  const double a = profile.half_period();
  const double node_spacing = profile.grid()[1] - profile.grid()[0];
  constexpr int kRungs = 9;

  GluingReport report;
  auto one_sided = [&](double x0, int k, int side, double h) {
    // side = -1: stencil marches left of x0; +1: right.
    const int npts = k + 4;
    std::vector<double> nodes(npts), values(npts);
    for (int j = 0; j < npts; ++j) {
      nodes[j] = x0 + side * j * h;
      values[j] = profile.radius(nodes[j]);
    }
    const std::vector<double> w = fd_weights(nodes, x0, k);
    double acc = 0.0;
    for (int j = 0; j < npts; ++j) acc += w[j] * values[j];
    return acc;
  };
  // Richardson pair at step h, then a halving ladder; the selected rung is
  // the one whose neighbours agree best (truncation and table noise cross
  // there). The left/right rung is shared so mismatches cancel coherently.
  auto rung_estimates = [&](double x0, int k, int side) {
    const int npts = k + 4;
    const double h0 = a / (npts + 1.0);
    std::vector<double> est(kRungs);
    for (int j = 0; j < kRungs; ++j) {
      const double h = h0 * std::pow(0.5, j);
      const double coarse = one_sided(x0, k, side, h);
      const double fine = one_sided(x0, k, side, 0.5 * h);
      const double order_pow = std::pow(2.0, npts - k);
      est[j] = (order_pow * fine - coarse) / (order_pow - 1.0);
      if (0.5 * h < 4.0 * node_spacing && j + 1 == kRungs)
        report.step_floor_warning = true;
    }
    return est;
  };

  for (int k = 1; k <= k_max; ++k) {
    GluingOrder row;
    row.order = k;
    row.tolerance = tol_glue(k);

    for (int joint = 0; joint < 2; ++joint) {
      const double x0 = joint == 0 ? 0.0 : a;
      const auto left = rung_estimates(x0, k, -1);
      const auto right = rung_estimates(x0, k, +1);
      int pick = 0;
      double best_gap = 1e300;
      for (int j = 0; j + 1 < kRungs; ++j) {
        const double gap =
            std::abs(left[j] - left[j + 1]) + std::abs(right[j] - right[j + 1]);
        if (gap < best_gap) {
          best_gap = gap;
          pick = j + 1;
        }
      }
      const double est_l = left[pick];
      const double est_r = right[pick];
      const double v0 = profile.radius(x0);
      const double sigma =
          std::sqrt(1.0 + std::abs(radial_accel_deriv(profile.params(), v0)));
      const double scale =
          (1.0 + std::abs(radial_accel(profile.params(), v0))) * std::pow(sigma, k - 1);
      if (joint == 0) {
        row.left_at_zero = est_l;
        row.right_at_zero = est_r;
        row.scale_at_zero = scale;
      } else {
        row.left_at_half = est_l;
        row.right_at_half = est_r;
        row.scale_at_half = scale;
      }
    }

    if (k % 2 == 1) {
      row.odd_at_zero = std::max(std::abs(row.left_at_zero), std::abs(row.right_at_zero));
      row.odd_at_half = std::max(std::abs(row.left_at_half), std::abs(row.right_at_half));
      row.pass = row.odd_at_zero <= row.tolerance * row.scale_at_zero &&
                 row.odd_at_half <= row.tolerance * row.scale_at_half;
    } else {
      row.mismatch_at_zero = std::abs(row.left_at_zero - row.right_at_zero);
      row.mismatch_at_half = std::abs(row.left_at_half - row.right_at_half);
      row.pass = row.mismatch_at_zero <= row.tolerance * row.scale_at_zero &&
                 row.mismatch_at_half <= row.tolerance * row.scale_at_half;
    }
    report.all_pass = report.all_pass && row.pass;
    report.orders.push_back(row);
  }
  return report;
}

}  // namespace horizonlab
