#include "cli.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "horizonlab/errors.hpp"
#include "horizonlab/flow.hpp"
#include "horizonlab/geometry.hpp"
#include "horizonlab/inequalities.hpp"
#include "horizonlab/models.hpp"
#include "horizonlab/profile.hpp"
#include "horizonlab/report_io.hpp"
#include "horizonlab/spectral.hpp"
#include "horizonlab/width.hpp"

namespace horizonlab::cli {

namespace {

const char* kCommands[] = {"classify", "roots",        "extend", "verify", "spectrum",
                           "inequalities", "flow", "width",  "sweep"};

bool known_command(const std::string& cmd) {
  for (const char* c : kCommands)
    if (cmd == c) return true;
  return false;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    size_t pos = 0;
    const double value = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw InvalidConfig("invalid number for " + what + ": '" + text + "'");
  }
}

GridSpec parse_grid(const std::string& text, const std::string& what) {
  GridSpec g;
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw InvalidConfig(what + " expects lo:hi:n, got '" + text + "'");
  g.lo = parse_double(text.substr(0, c1), what);
  g.hi = parse_double(text.substr(c1 + 1, c2 - c1 - 1), what);
  g.n = static_cast<int>(parse_double(text.substr(c2 + 1), what));
  if (g.n < 1 || !(g.hi >= g.lo)) throw InvalidConfig(what + ": bad range '" + text + "'");
  g.set = true;
  return g;
}

void apply_tol(Tolerances& tol, const std::string& kv) {
  const auto eq = kv.find('=');
  if (eq == std::string::npos) throw InvalidConfig("--tol expects KEY=VAL, got '" + kv + "'");
  const std::string key = kv.substr(0, eq);
  const double value = parse_double(kv.substr(eq + 1), "--tol " + key);
  if (!(value > 0.0)) throw InvalidConfig("tolerance override must be positive: " + kv);
  if (key == "root")
    tol.root = value;
  else if (key == "regime")
    tol.regime = value;
  else if (key == "ode")
    tol.ode = value;
  else if (key == "eig")
    tol.eig = value;
  else if (key == "ineq")
    tol.ineq = value;
  else
    throw InvalidConfig("unknown tolerance key '" + key + "'");
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidConfig("cannot open config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidConfig("config line is not key=value: '" + line + "'");
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

}  // namespace

RunConfig parse_args(int argc, const char* const* argv) {
  RunConfig cfg;
  std::map<std::string, std::string> file_kv;
  std::vector<std::string> tol_overrides;
  std::map<std::string, bool> seen;

  std::vector<std::string> args(argv + 1, argv + argc);
  size_t i = 0;
  if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
    cfg.command = args[0];
    i = 1;
  }
  auto next_value = [&](const std::string& flag) -> std::string {
    if (i + 1 >= args.size()) throw InvalidConfig(flag + " expects a value");
    return args[++i];
  };
  for (; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--m") {
      cfg.params.m = parse_double(next_value(a), a);
      seen["m"] = true;
    } else if (a == "--Q") {
      cfg.params.Q = parse_double(next_value(a), a);
      seen["Q"] = true;
    } else if (a == "--lambda") {
      cfg.params.lambda = parse_double(next_value(a), a);
      seen["lambda"] = true;
    } else if (a == "--P") {
      cfg.params.P = parse_double(next_value(a), a);
      seen["P"] = true;
    } else if (a == "--grid-q2l") {
      cfg.grid_q2l = parse_grid(next_value(a), a);
      seen["grid-q2l"] = true;
    } else if (a == "--grid-m2l") {
      cfg.grid_m2l = parse_grid(next_value(a), a);
      seen["grid-m2l"] = true;
    } else if (a == "--tol") {
      tol_overrides.push_back(next_value(a));
    } else if (a == "--out") {
      cfg.out_path = next_value(a);
      seen["out"] = true;
    } else if (a == "--format") {
      cfg.format = next_value(a);
      seen["format"] = true;
    } else if (a == "--s0") {
      cfg.flow_s0 = parse_double(next_value(a), a);
      seen["s0"] = true;
    } else if (a == "--t-end") {
      cfg.flow_t_end = parse_double(next_value(a), a);
      seen["t-end"] = true;
    } else if (a == "--threads") {
      cfg.threads = static_cast<int>(parse_double(next_value(a), a));
      seen["threads"] = true;
    } else if (a == "--config") {
      file_kv = read_config_file(next_value(a));
    } else {
      throw InvalidConfig("unknown flag '" + a + "'");
    }
  }

  // Config file entries apply where no flag was given; flags win.
  for (const auto& [key, value] : file_kv) {
    if (key == "command") {
      if (cfg.command.empty()) cfg.command = value;
    } else if (key == "m" && !seen["m"]) {
      cfg.params.m = parse_double(value, key);
    } else if (key == "Q" && !seen["Q"]) {
      cfg.params.Q = parse_double(value, key);
    } else if (key == "lambda" && !seen["lambda"]) {
      cfg.params.lambda = parse_double(value, key);
    } else if (key == "P" && !seen["P"]) {
      cfg.params.P = parse_double(value, key);
    } else if (key == "grid-q2l" && !seen["grid-q2l"]) {
      cfg.grid_q2l = parse_grid(value, key);
    } else if (key == "grid-m2l" && !seen["grid-m2l"]) {
      cfg.grid_m2l = parse_grid(value, key);
    } else if (key == "out" && !seen["out"]) {
      cfg.out_path = value;
    } else if (key == "format" && !seen["format"]) {
      cfg.format = value;
    } else if (key == "s0" && !seen["s0"]) {
      cfg.flow_s0 = parse_double(value, key);
    } else if (key == "t-end" && !seen["t-end"]) {
      cfg.flow_t_end = parse_double(value, key);
    } else if (key == "threads" && !seen["threads"]) {
      cfg.threads = static_cast<int>(parse_double(value, key));
    } else if (key.rfind("tol.", 0) == 0) {
      tol_overrides.push_back(key.substr(4) + "=" + value);
    }
  }
  for (const std::string& kv : tol_overrides) apply_tol(cfg.tol, kv);

  if (cfg.command.empty()) throw InvalidConfig("no command given");
  if (!known_command(cfg.command)) throw InvalidConfig("unknown command '" + cfg.command + "'");
  if (cfg.format != "json" && cfg.format != "csv")
    throw InvalidConfig("format must be json or csv");
  const bool has_grid = cfg.grid_q2l.set && cfg.grid_m2l.set;
  if (cfg.command == "sweep" && !has_grid)
    throw InvalidConfig("sweep requires --grid-q2l and --grid-m2l");
  if (cfg.command != "sweep" && (cfg.grid_q2l.set || cfg.grid_m2l.set))
    throw InvalidConfig("grid flags are only valid with the sweep command");
  return cfg;
}

namespace {

void emit_params(JsonWriter& w, const ModelParams& p) {
  w.key("params").begin_object();
  w.field("m", p.m);
  w.field("Q", p.Q);
  w.field("lambda", p.lambda);
  w.field("P", p.P);
  w.end_object();
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const RegimeClass rc = classify_regime(cfg.params, cfg.tol.regime);
  JsonWriter w;
  w.begin_object();
  w.field("schema", "1");
  w.field("command", "classify");
  emit_params(w, cfg.params);
  w.field("regime", to_string(rc.kind));
  w.field("rho", rc.rho);
  w.field("alpha_or_beta", rc.alpha_or_beta);
  w.field("q2l", cfg.params.q2l());
  w.field("m2l", cfg.params.m2l());
  w.end_object();
  out << w.str() << "\n";
  return 0;
}

int cmd_roots(const RunConfig& cfg, std::ostream& out) {
  const RootProfile roots = horizon_roots(cfg.params, cfg.tol.root);
  JsonWriter w;
  w.begin_object();
  w.field("schema", "1");
  w.field("command", "roots");
  emit_params(w, cfg.params);
  w.begin_array("roots");
  for (const auto& z : roots.roots) {
    w.begin_object();
    w.field("re", z.real());
    w.field("im", z.imag());
    w.end_object();
  }
  w.end_array();
  w.begin_array("positive_roots");
  for (double r : roots.positive_roots) w.element(r);
  w.end_array();
  w.field("negative_root", roots.negative_root.value_or(kNaN));
  w.field("rho_star", roots.rho_star);
  w.field("rho_star_star", roots.rho_star_star);
  w.field("degenerate", roots.degenerate);
  w.field("max_residual", roots.max_residual);
  w.field("vieta_residual", roots.vieta_residual);
  w.end_object();
  out << w.str() << "\n";
  return 0;
}

int cmd_extend(const RunConfig& cfg, std::ostream& out) {
  const WarpedProfile profile = build_profile(cfg.params, cfg.tol.ode);
  if (cfg.format == "csv") {
    write_profile_csv(out, profile);
    if (!cfg.out_path.empty()) {
      std::ofstream header(cfg.out_path + ".json");
      header << profile_json_header(profile) << "\n";
    }
    return 0;
  }
  out << profile_json_header(profile) << "\n";
  return 0;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const HorizonIndexReport rep = horizon_index_report(cfg.params, 10, cfg.tol.eig);
  JsonWriter w;
  w.begin_object();
  w.field("schema", "1");
  w.field("command", "spectrum");
  emit_params(w, cfg.params);
  w.begin_array("horizons");
  for (const auto& entry : rep.entries) {
    w.begin_object();
    w.field("horizon", entry.horizon);
    w.field("radius", entry.radius);
    w.field("potential_constant", entry.spectrum.potential_constant);
    w.field("index", entry.spectrum.index);
    w.field("nullity", entry.spectrum.nullity);
    w.field("completion_degree", entry.spectrum.completion_degree);
    w.field("stability", to_string(entry.stability));
    w.begin_array("modes");
    for (const auto& mode : entry.spectrum.modes) {
      w.begin_object();
      w.field("l", mode.l);
      w.field("eigenvalue", mode.eigenvalue);
      w.field("multiplicity", mode.multiplicity);
      w.end_object();
    }
    w.end_array();
    w.end_object();
  }
  w.end_array();
  w.field("degenerate_family", rep.degenerate_family);
  w.field("rc_index_is_one", rep.rc_index_is_one);
  w.end_object();
  out << w.str() << "\n";
  return 0;
}

int cmd_inequalities(const RunConfig& cfg, std::ostream& out) {
  JsonWriter w;
  w.begin_object();
  w.field("schema", "1");
  w.field("command", "inequalities");
  emit_params(w, cfg.params);
  w.begin_array("reports");
  const InequalityReport mass = mass_bound_check(cfg.params, cfg.tol.ineq);
  write_inequality(w, mass);

  const RegimeClass rc = classify_regime(cfg.params, cfg.tol.regime);
  bool holds = mass.holds;
  if (rc.kind != Regime::NoPhysicalHorizon) {
    const WarpedProfile profile = build_profile(cfg.params, cfg.tol.ode);
    double widest = 0.0;
    for (double h : profile.horizons()) widest = std::max(widest, profile.radius(h));
    double s_widest = profile.horizons().front();
    for (double h : profile.horizons())
      if (profile.radius(h) == widest) s_widest = h;
    const ChargeValue q = charge(profile, s_widest);
    const SliceSurface slice = slice_geometry(profile, s_widest);
    RigidityInputs geom;
    geom.totally_geodesic = slice.totally_geodesic;
    geom.normal_aligned_field = true;  // radial fields
    const ResidualReport res = system_residuals(profile);
    geom.constant_scalar = res.scalar_identity_residual <= 1e-9;
    const InequalityReport ac = area_charge_inequality(
        slice.area, q.electric, q.magnetic, cfg.params.lambda, 0, cfg.tol.ineq, geom);
    write_inequality(w, ac);
    holds = holds && ac.holds;
    const ChargeAreaBounds bounds = charge_and_area_bounds(q.electric, cfg.params.lambda);
    write_inequality(w, bounds.charge_bound);
    w.end_array();
    w.field("area_min", bounds.area_min);
    w.field("area_max", bounds.area_max);
    w.field("slice_area", slice.area);
    w.field("slice_area_in_interval",
            slice.area >= bounds.area_min - 1e-9 && slice.area <= bounds.area_max + 1e-9);
  } else {
    w.end_array();
  }
  w.end_object();
  out << w.str() << "\n";
  return holds ? 0 : 1;
}

int cmd_flow(const RunConfig& cfg, std::ostream& out) {
  const WarpedProfile profile = build_profile(cfg.params, cfg.tol.ode);
  const double s0 = std::isnan(cfg.flow_s0)
                        ? (std::isnan(profile.half_period()) ? 0.5 * profile.length()
                                                             : 0.5 * profile.half_period())
                        : cfg.flow_s0;
  FlowControls controls;
  const FlowState state = flow_slice(profile, s0, cfg.flow_t_end, controls);
  if (cfg.format == "csv") {
    out << "t,s,area\n";
    for (size_t i = 0; i < state.t.size(); ++i)
      out << format_double(state.t[i]) << "," << format_double(state.s[i]) << ","
          << format_double(state.area[i]) << "\n";
    return 0;
  }
  JsonWriter w;
  w.begin_object();
  w.field("schema", "1");
  w.field("command", "flow");
  emit_params(w, cfg.params);
  w.field("s0", s0);
  w.field("t_end", cfg.flow_t_end);
  w.field("stationary", state.stationary)
      .field("stalled", state.stalled)
      .field("samples", static_cast<int>(state.t.size()));
  w.field("area_initial", state.area.front());
  w.field("area_final", state.area.back());
  w.field("first_variation_residual", first_variation_residual(state, profile));
  w.end_object();
  out << w.str() << "\n";
  return 0;
}

int cmd_width(const RunConfig& cfg, std::ostream& out) {
  const WarpedProfile profile = build_profile(cfg.params, cfg.tol.ode);
  const SweepoutEval eval = sweepout_value(profile);
  const std::vector<PerturbationFamily> families = {
      {0.0, 0}, {1e-2, 0}, {1e-2, 1}, {1e-2, 2}, {5e-3, 3}};
  const ProbeResult probe = perturbation_probe(profile, families);
  JsonWriter w;
  w.begin_object();
  w.field("schema", "1");
  w.field("command", "width");
  emit_params(w, cfg.params);
  w.field("L_value", eval.max_area);
  w.field("argmax_s", eval.argmax_s);
  w.field("horizon_area", eval.horizon_area);
  w.field("index_at_max", eval.index_at_max);
  w.field("matches_theorem_b", eval.matches_theorem);
  w.field("plateau", eval.plateau);
  w.key("probe").begin_object();
  w.field("min_max_area", probe.min_max_area);
  w.field("reference", probe.reference);
  w.field("tol_probe", probe.tol_probe);
  w.field("holds", probe.holds);
  w.end_object();
  w.end_object();
  out << w.str() << "\n";
  return probe.holds ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const RegimeClass rc = classify_regime(cfg.params, cfg.tol.regime);
  const WarpedProfile profile = build_profile(cfg.params, cfg.tol.ode);
  const bool closed_form = profile.kind() != ProfileKind::RnDSNumeric;

  bool pass = true;
  JsonWriter w;
  w.begin_object();
  w.field("schema", "1");
  w.field("command", "verify");
  emit_params(w, cfg.params);
  w.field("regime", to_string(rc.kind));

  const ResidualReport res = system_residuals(profile);
  const double res_bound = closed_form ? 1e-10 : 1e-7;
  const bool res_ok = res.worst() <= res_bound;
  pass = pass && res_ok;
  w.key("residuals").begin_object();
  w.field("hessian", res.hessian_residual);
  w.field("trace", res.trace_residual);
  w.field("maxwell", res.maxwell_residual);
  w.field("scalar_identity", res.scalar_identity_residual);
  w.field("bound", res_bound);
  w.field("pass", res_ok);
  w.end_object();

  if (profile.periodic()) {
    const GluingReport glue = check_smooth_gluing(profile, 5);
    pass = pass && glue.all_pass;
    w.key("smooth_gluing").begin_object();
    w.field("all_pass", glue.all_pass);
    w.field("step_floor_warning", glue.step_floor_warning);
    w.begin_array("orders");
    for (const auto& row : glue.orders) {
      w.begin_object();
      w.field("order", row.order);
      w.field("odd_at_zero", row.odd_at_zero);
      w.field("odd_at_half", row.odd_at_half);
      w.field("mismatch_at_zero", row.mismatch_at_zero);
      w.field("mismatch_at_half", row.mismatch_at_half);
      w.field("tolerance", row.tolerance);
      w.field("pass", row.pass);
      w.end_object();
    }
    w.end_array();
    w.end_object();
  }

  const HorizonIndexReport idx = horizon_index_report(cfg.params, 10, cfg.tol.eig);
  const bool idx_ok = idx.degenerate_family || idx.rc_index_is_one;
  pass = pass && idx_ok;
  w.key("horizon_indices").begin_object();
  w.field("degenerate_family", idx.degenerate_family);
  w.field("rc_index_is_one", idx.rc_index_is_one);
  w.field("pass", idx_ok);
  w.end_object();

  double widest_s = profile.horizons().front();
  for (double h : profile.horizons())
    if (profile.radius(h) > profile.radius(widest_s)) widest_s = h;
  const SliceSurface slice = slice_geometry(profile, widest_s);
  const ChargeValue q = charge(profile, widest_s);
  RigidityInputs geom;
  geom.totally_geodesic = slice.totally_geodesic;
  geom.normal_aligned_field = true;
  geom.constant_scalar = res.scalar_identity_residual <= 1e-9;
  const InequalityReport ac = area_charge_inequality(slice.area, q.electric, q.magnetic,
                                                     cfg.params.lambda, 0, cfg.tol.ineq, geom);
  pass = pass && ac.holds;
  w.key("area_charge").begin_object();
  w.field("lhs", ac.lhs);
  w.field("rhs", ac.rhs);
  w.field("slack", ac.slack);
  w.field("saturated", ac.saturated);
  w.begin_array("flags");
  for (const auto& flag : ac.rigidity_flags) w.element(to_string(flag));
  w.end_array();
  w.field("pass", ac.holds);
  w.end_object();

  // Boundary identity over the region between consecutive horizons (or pole
  // to equator on the round family). The one-horizon families have no such
  // region, so the check is skipped there.
  std::optional<std::pair<double, double>> region;
  if (profile.kind() == ProfileKind::RnDSNumeric || profile.kind() == ProfileKind::Nariai)
    region = {{0.0, profile.half_period()}};
  else if (profile.kind() == ProfileKind::DeSitter)
    region = {{0.0, profile.half_period()}};
  if (region) {
    const PohozaevReport po =
        pohozaev_identity(profile, region->first, region->second, 512);
    const double po_bound = closed_form ? 1e-10 : 1e-6;
    const bool po_ok = po.residual <= po_bound * std::max(1.0, std::abs(po.lhs));
    pass = pass && po_ok;
    w.key("pohozaev").begin_object();
    w.field("lhs", po.lhs);
    w.field("rhs", po.rhs);
    w.field("residual", po.residual);
    w.field("bound", po_bound);
    w.field("pass", po_ok);
    w.end_object();
  }

  w.field("pass", pass);
  w.end_object();
  out << w.str() << "\n";
  return pass ? 0 : 1;
}

struct SweepRow {
  double q2l = 0.0;
  double m2l = 0.0;
  std::string regime;
  double r_minus = kNaN;
  double r_plus = kNaN;
  double r_c = kNaN;
  int index_rc = -1;
  int index_rplus = -1;
  double width = kNaN;
  double ac_slack = kNaN;
};

SweepRow sweep_cell(double q2l, double m2l, const RunConfig& cfg) {
  SweepRow row;
  row.q2l = q2l;
  row.m2l = m2l;
  ModelParams p;
  p.lambda = cfg.params.lambda;
  p.Q = std::sqrt(q2l / p.lambda);
  p.m = std::sqrt(m2l / p.lambda);
  const RegimeClass rc = classify_regime(p, cfg.tol.regime);
  row.regime = to_string(rc.kind);

  auto fill_from_radius = [&](double radius) {
    row.index_rc = jacobi_spectrum(p, radius).index;
    const double area = 4.0 * kPi * radius * radius;
    row.ac_slack = 12.0 * kPi - (p.lambda * area + 16.0 * kPi * kPi * p.Q * p.Q / area);
  };

  switch (rc.kind) {
    case Regime::RNdSGeneric: {
      const RootProfile roots = horizon_roots(p, cfg.tol.root);
      row.r_minus = roots.has_three_positive() ? roots.r_minus() : kNaN;
      row.r_plus = roots.r_plus();
      row.r_c = roots.r_cosmological();
      row.index_rplus = jacobi_spectrum(p, row.r_plus).index;
      const WarpedProfile profile = build_profile(p, cfg.tol.ode);
      row.width = sweepout_value(profile).max_area;
      fill_from_radius(row.r_c);
      break;
    }
    case Regime::Nariai: {
      const double other = std::sqrt(3.0 / p.lambda - 2.0 * rc.rho * rc.rho) - rc.rho;
      row.r_minus = other;
      row.r_plus = row.r_c = rc.rho;
      row.index_rplus = jacobi_spectrum(p, rc.rho).index;
      row.width = 4.0 * kPi * rc.rho * rc.rho;
      fill_from_radius(rc.rho);
      break;
    }
    case Regime::ColdBlackHole: {
      const double other = std::sqrt(3.0 / p.lambda - 2.0 * rc.rho * rc.rho) - rc.rho;
      row.r_minus = row.r_plus = rc.rho;
      row.r_c = other;
      row.index_rplus = jacobi_spectrum(p, rc.rho).index;
      fill_from_radius(other);
      break;
    }
    case Regime::UltraCold: {
      row.r_minus = row.r_plus = row.r_c = rc.rho;
      row.index_rplus = jacobi_spectrum(p, rc.rho).index;
      fill_from_radius(rc.rho);
      break;
    }
    case Regime::DeSitter: {
      row.r_c = std::sqrt(3.0 / p.lambda);
      row.width = 4.0 * kPi * 3.0 / p.lambda;
      fill_from_radius(row.r_c);
      break;
    }
    case Regime::NoPhysicalHorizon: break;
  }
  return row;
}

int worker_count(const RunConfig& cfg, size_t cells) {
  int n = cfg.threads;
  if (n <= 0) {
    if (const char* env = std::getenv("HORIZONLAB_THREADS")) n = std::atoi(env);
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  return static_cast<int>(std::min<size_t>(n, std::max<size_t>(cells, 1)));
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  if (cfg.params.lambda <= 0.0)
    throw InvalidConfig("sweep requires --lambda > 0 to fix the scale");
  const GridSpec& gq = cfg.grid_q2l;
  const GridSpec& gm = cfg.grid_m2l;
  const size_t cells = static_cast<size_t>(gq.n) * gm.n;
  std::vector<SweepRow> rows(cells);

  // Cells are pure and independent; a bounded pool fills the row table and
  // the write-out below stays single threaded.
  std::atomic<size_t> cursor{0};
  auto work = [&]() {
    size_t i;
    while ((i = cursor.fetch_add(1)) < cells) {
      const size_t iq = i / gm.n;
      const size_t im = i % gm.n;
      const double q2l = gq.n == 1 ? gq.lo : gq.lo + (gq.hi - gq.lo) * iq / (gq.n - 1);
      const double m2l = gm.n == 1 ? gm.lo : gm.lo + (gm.hi - gm.lo) * im / (gm.n - 1);
      rows[i] = sweep_cell(q2l, m2l, cfg);
    }
  };
  const int n_workers = worker_count(cfg, cells);
  std::vector<std::thread> pool;
  for (int t = 1; t < n_workers; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  auto csv_num = [](double v) { return std::isnan(v) ? std::string("nan") : format_double(v); };
  auto csv_idx = [](int v) { return v < 0 ? std::string("nan") : std::to_string(v); };
  out << "Q2L,m2L,regime,r_minus,r_plus,r_c,index_rc,index_rplus,width,ac_slack\n";
  for (const SweepRow& row : rows) {
    out << csv_num(row.q2l) << "," << csv_num(row.m2l) << "," << row.regime << ","
        << csv_num(row.r_minus) << "," << csv_num(row.r_plus) << "," << csv_num(row.r_c)
        << "," << csv_idx(row.index_rc) << "," << csv_idx(row.index_rplus) << ","
        << csv_num(row.width) << "," << csv_num(row.ac_slack) << "\n";
  }
  return 0;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) throw InvalidConfig("cannot open output path '" + cfg.out_path + "'");
    sink = &file;
  }
  (void)err;
  if (cfg.command == "classify") return cmd_classify(cfg, *sink);
  if (cfg.command == "roots") return cmd_roots(cfg, *sink);
  if (cfg.command == "extend") return cmd_extend(cfg, *sink);
  if (cfg.command == "verify") return cmd_verify(cfg, *sink);
  if (cfg.command == "spectrum") return cmd_spectrum(cfg, *sink);
  if (cfg.command == "inequalities") return cmd_inequalities(cfg, *sink);
  if (cfg.command == "flow") return cmd_flow(cfg, *sink);
  if (cfg.command == "width") return cmd_width(cfg, *sink);
  if (cfg.command == "sweep") return cmd_sweep(cfg, *sink);
  throw InvalidConfig("unknown command '" + cfg.command + "'");
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    const RunConfig cfg = parse_args(argc, argv);
    return run(cfg, out, err);
  } catch (const InvalidConfig& e) {
    JsonWriter w;
    w.begin_object();
    w.field("schema", "1");
    w.field("error", "invalid_config");
    w.field("detail", e.what());
    w.end_object();
    err << w.str() << "\n";
    return 2;
  } catch (const std::exception& e) {
    JsonWriter w;
    w.begin_object();
    w.field("schema", "1");
    w.field("error", "run_failed");
    w.field("detail", e.what());
    w.end_object();
    err << w.str() << "\n";
    return 1;
  }
}

}  // namespace horizonlab::cli
