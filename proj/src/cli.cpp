#include "rydberg/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "rydberg/ideal.hpp"

namespace rydberg::cli {

using nlohmann::json;

namespace {

template <typename T>
void read_if(const json& obj, const char* key, T& out) {
  if (obj.contains(key) && !obj.at(key).is_null()) out = obj.at(key).get<T>();
}

template <typename T>
void read_if(const json& obj, const char* key, std::optional<T>& out) {
  if (obj.contains(key) && !obj.at(key).is_null()) out = obj.at(key).get<T>();
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

json per_input(const std::vector<double>& values, int n_atoms) {
  json out = json::object();
  const std::vector<std::size_t> comp = computational_indices(n_atoms);
  for (std::size_t q = 0; q < values.size(); ++q) out[ket_label(comp[q], n_atoms)] = values[q];
  return out;
}

json budget_json(const ErrorBudget& b) {
  return {{"T_g_us", b.gate_time_us},  {"T_x_us", b.t_x_us},   {"T_bar_Ry_us", b.mean_dwell_us},
          {"phi_rad", b.phi},          {"E_decay", b.e_decay}, {"E_bl", b.e_blockade},
          {"E_2ph", b.e_two_photon},   {"total", b.total}};
}

}  // namespace

GateKind parse_gate(const std::string& name) {
  if (name == "deutsch") return GateKind::deutsch;
  if (name == "toffoli") return GateKind::toffoli;
  if (name == "cnot") return GateKind::cnot;
  throw ConstructionError("unknown gate '" + name + "' (expected deutsch, toffoli or cnot)");
}

void RunConfig::resolve() {
  if (gate == GateKind::deutsch) {
    if (theta && ratio_omega2_over_omega1) {
      throw ConstructionError("supply exactly one of theta and ratio_omega2_over_omega1");
    }
    if (!theta && !ratio_omega2_over_omega1) ratio_omega2_over_omega1 = 2.0;
  } else {
    if (theta) throw ConstructionError("theta only applies to the deutsch gate");
    if (!ratio_omega2_over_omega1) ratio_omega2_over_omega1 = 2.0;
  }
  if (theta && !(*theta >= 0.0 && *theta <= std::numbers::pi)) {
    throw ConstructionError("theta must lie in [0, pi]");
  }
  if (!(omega0_mhz > 0.0) || !(omega_bar_mhz > 0.0)) throw ConstructionError("Rabi frequencies must be positive");
  if (!omega3_mhz) omega3_mhz = omega_bar_mhz / std::numbers::sqrt2;
  if (!(*omega3_mhz > 0.0)) throw ConstructionError("omega3 must be positive");
  if (!(v_scale > 0.0)) throw ConstructionError("v_scale must be positive");
  if (tau_us && !(*tau_us > 0.0)) throw ConstructionError("tau_us must be positive");
  if (phase_max_n < 1) throw ConstructionError("phase.max_n must be >= 1");
}

double RunConfig::lifetime_us() const { return tau_us.value_or(lifetime_at(temperature)); }

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConstructionError("config must be a JSON object");
  RunConfig c;
  try {
    if (doc.contains("gate")) c.gate = parse_gate(doc.at("gate").get<std::string>());
    read_if(doc, "theta", c.theta);
    read_if(doc, "ratio_omega2_over_omega1", c.ratio_omega2_over_omega1);
    read_if(doc, "omega0_MHz", c.omega0_mhz);
    read_if(doc, "omega_bar_MHz", c.omega_bar_mhz);
    read_if(doc, "omega3_MHz", c.omega3_mhz);
    read_if(doc, "c6_GHz_um6", c.c6_ghz_um6);
    read_if(doc, "L_um", c.spacing_um);
    read_if(doc, "tau_us", c.tau_us);
    if (doc.contains("temperature")) c.temperature = parse_temperature(doc.at("temperature").get<std::string>());
    if (doc.contains("options")) {
      const json& opt = doc.at("options");
      if (opt.contains("decay")) {
        const auto mode = opt.at("decay").get<std::string>();
        if (mode != "none" && mode != "effective") throw ConstructionError("options.decay must be none or effective");
        c.decay = (mode == "effective");
      }
      if (opt.contains("cc_interaction")) {
        const auto mode = opt.at("cc_interaction").get<std::string>();
        if (mode != "physical" && mode != "none") {
          throw ConstructionError("options.cc_interaction must be physical or none");
        }
        c.cc_interaction = mode == "none" ? CcInteraction::none : CcInteraction::physical;
      }
      if (opt.contains("frame_correction")) {
        const json& fc = opt.at("frame_correction");
        c.frame_correction = fc.is_boolean() ? fc.get<bool>() : fc.get<std::string>() == "on";
      }
      read_if(opt, "v_scale", c.v_scale);
      read_if(opt, "dwell_sampling_step_us", c.dwell_sampling_step_us);
    }
    if (doc.contains("sweep")) {
      const json& sw = doc.at("sweep");
      read_if(sw, "omega_bar_min_MHz", c.grid.omega_bar_min_mhz);
      read_if(sw, "omega_bar_max_MHz", c.grid.omega_bar_max_mhz);
      read_if(sw, "grid_step_MHz", c.grid.step_mhz);
    }
    if (doc.contains("phase")) read_if(doc.at("phase"), "max_n", c.phase_max_n);
  } catch (const json::exception& e) {
    throw ConstructionError(std::string("malformed config: ") + e.what());
  }
  return c;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConstructionError("cannot open config file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ConstructionError("cannot parse config file '" + path + "': " + e.what());
  }
  return parse_config(doc);
}

json to_json(const RunConfig& c) {
  json out = {
      {"gate", gate_kind_name(c.gate)},
      {"theta", c.theta ? json(*c.theta) : json(nullptr)},
      {"ratio_omega2_over_omega1",
       c.ratio_omega2_over_omega1 ? json(*c.ratio_omega2_over_omega1) : json(nullptr)},
      {"omega0_MHz", c.omega0_mhz},
      {"omega_bar_MHz", c.omega_bar_mhz},
      {"omega3_MHz", c.omega3_mhz ? json(*c.omega3_mhz) : json(nullptr)},
      {"c6_GHz_um6", c.c6_ghz_um6},
      {"L_um", c.spacing_um},
      {"tau_us", c.lifetime_us()},
      {"temperature", temperature_name(c.temperature)},
      {"options",
       {{"decay", c.decay ? "effective" : "none"},
        {"cc_interaction", c.cc_interaction == CcInteraction::none ? "none" : "physical"},
        {"frame_correction", c.frame_correction},
        {"v_scale", c.v_scale},
        {"dwell_sampling_step_us", c.dwell_sampling_step_us}}},
      {"sweep",
       {{"omega_bar_min_MHz", c.grid.omega_bar_min_mhz},
        {"omega_bar_max_MHz", c.grid.omega_bar_max_mhz},
        {"grid_step_MHz", c.grid.step_mhz}}},
      {"phase", {{"max_n", c.phase_max_n}}},
  };
  return out;
}

DriveParams resolve_drive(const RunConfig& c) {
  const double omega0 = mhz_to_angular(c.omega0_mhz);
  const double omega_bar = mhz_to_angular(c.omega_bar_mhz);
  const double omega3 = mhz_to_angular(c.omega3_mhz.value_or(c.omega_bar_mhz / std::numbers::sqrt2));
  if (c.theta) return DriveParams::from_theta(omega0, omega_bar, *c.theta, omega3);
  return DriveParams::from_ratio(omega0, omega_bar, c.ratio_omega2_over_omega1.value_or(2.0), omega3);
}

PhysicalParams resolve_params(const RunConfig& c) {
  PhysicalParams p{c.c6_ghz_um6, c.spacing_um, c.lifetime_us(), c.gate == GateKind::cnot ? 2 : 3};
  p.validate();
  return p;
}

SimulationOptions resolve_options(const RunConfig& c) {
  SimulationOptions o;
  if (c.decay) o.decay_lifetime_us = c.lifetime_us();
  o.cc_interaction = c.cc_interaction;
  o.frame_correction = c.frame_correction;
  o.v_scale = c.v_scale;
  o.dwell_sampling_step_us = c.dwell_sampling_step_us;
  return o;
}

GateSchedule resolve_schedule(const RunConfig& c) {
  const DriveParams drive = resolve_drive(c);
  switch (c.gate) {
    case GateKind::deutsch: return deutsch_schedule(drive);
    case GateKind::toffoli: return toffoli_schedule(drive);
    case GateKind::cnot: return cnot_schedule(drive);
  }
  throw ConstructionError("unknown gate kind");
}

json cmd_synth(const RunConfig& config, std::ostream* human) {
  RunConfig c = config;
  c.resolve();
  const DriveParams drive = resolve_drive(c);
  const PhysicalParams params = resolve_params(c);
  const GateSchedule schedule = resolve_schedule(c);
  const double v = params.blockade_shift();

  json segments = json::array();
  for (std::size_t k = 0; k < schedule.segments.size(); ++k) {
    const PulseSegment& seg = schedule.segments[k];
    json transitions = json::array();
    for (const Transition& tr : seg.transitions) {
      transitions.push_back({{"atom", tr.atom},
                             {"lower", std::string(level_symbol(tr.lower))},
                             {"rabi_MHz", angular_to_mhz(std::abs(tr.rabi))},
                             {"phase_rad", std::arg(tr.rabi)},
                             {"rabi_re_MHz", angular_to_mhz(tr.rabi.real())},
                             {"rabi_im_MHz", angular_to_mhz(tr.rabi.imag())}});
    }
    segments.push_back({{"index", k + 1}, {"duration_us", seg.duration_us}, {"transitions", transitions}});
  }

  json matching = json::array();
  for (int n = 1; n <= c.phase_max_n; ++n) {
    matching.push_back({{"N", n}, {"omega_bar_MHz", angular_to_mhz(solve_phase_matching(n, v))}});
  }

  const AngleComponents ac = angle_components(drive.omega1, drive.omega2);
  json out = {{"config", to_json(c)},
              {"gate", gate_kind_name(schedule.kind)},
              {"n_atoms", schedule.n_atoms},
              {"total_duration_us", schedule.total_duration()},
              {"derived",
               {{"theta", drive.theta()},
                {"sin_theta", ac.sin_theta},
                {"cos_theta", ac.cos_theta},
                {"omega1_MHz", angular_to_mhz(drive.omega1)},
                {"omega2_MHz", angular_to_mhz(drive.omega2)},
                {"omega_bar_MHz", angular_to_mhz(drive.omega_bar())},
                {"omega3_MHz", angular_to_mhz(drive.omega3)},
                {"V_MHz", angular_to_mhz(v)},
                {"phi_rad", phase_phi(drive, v)},
                {"phase_matching", matching}}},
              {"segments", segments}};

  if (human) {
    std::ostream& os = *human;
    os << gate_kind_name(schedule.kind) << " schedule, " << schedule.segments.size() << " segments, "
       << std::setprecision(6) << schedule.total_duration() << " us\n";
    if (schedule.kind == GateKind::deutsch) {
      os << "  theta = " << drive.theta() << " rad (sin " << ac.sin_theta << ", cos " << ac.cos_theta << ")\n";
    }
    os << "  omega1/2pi = " << angular_to_mhz(drive.omega1) << " MHz, omega2/2pi = "
       << angular_to_mhz(drive.omega2) << " MHz, phi = " << phase_phi(drive, v) << " rad\n";
    for (std::size_t k = 0; k < schedule.segments.size(); ++k) {
      const PulseSegment& seg = schedule.segments[k];
      os << "  [" << k + 1 << "] " << seg.duration_us << " us:";
      for (const Transition& tr : seg.transitions) {
        os << "  atom" << tr.atom << " " << level_symbol(tr.lower) << "<->r " << angular_to_mhz(std::abs(tr.rabi))
           << " MHz @" << std::arg(tr.rabi) << " rad";
      }
      os << '\n';
    }
  }
  return out;
}

json cmd_simulate(const RunConfig& config) {
  RunConfig c = config;
  c.resolve();
  const DriveParams drive = resolve_drive(c);
  const PhysicalParams params = resolve_params(c);
  const GateSchedule schedule = resolve_schedule(c);
  const SimulationResult result = evolve(schedule, params, resolve_options(c));

  IdealGate ideal;
  switch (c.gate) {
    case GateKind::deutsch: ideal = deutsch_ideal(drive.theta()); break;
    case GateKind::toffoli: ideal = toffoli_ideal(); break;
    case GateKind::cnot: ideal = cnot_ideal(); break;
  }
  const double f_trace = gate_fidelity(result.computational_block, ideal.matrix, FidelityMode::trace);
  const double f_avg = gate_fidelity(result.computational_block, ideal.matrix, FidelityMode::state_average);

  json out = {{"config", to_json(c)},
              {"gate", gate_kind_name(c.gate)},
              {"ideal_theta", ideal.theta},
              {"fidelity", {{"trace", f_trace}, {"state_average", f_avg}}},
              {"infidelity", {{"trace", 1.0 - f_trace}, {"state_average", 1.0 - f_avg}}},
              {"leakage", per_input(result.leakage_per_input, result.n_atoms)},
              {"dwell_us", per_input(result.dwell_per_input, result.n_atoms)},
              {"norm_loss", per_input(result.norm_loss_per_input, result.n_atoms)},
              {"mean_norm_loss", result.mean_norm_loss()},
              {"applied_phase_rad", result.applied_phase},
              {"phase_mismatch_rad", result.phase_mismatch},
              {"unitarity_error", result.unitarity_error}};
  if (c.gate == GateKind::deutsch && c.decay) out["budget_E_decay"] = decay_error(drive, c.lifetime_us());
  return out;
}

std::string cmd_sweep(const RunConfig& config) {
  RunConfig c = config;
  c.resolve();
  PhysicalParams params = resolve_params(c);
  const SweepConstraints constraints{c.omega0_mhz, c.ratio_omega2_over_omega1.value_or(2.0)};
  const SweepResult result = sweep(c.grid, params, constraints);
  std::ostringstream os;
  os << kSweepHeader << '\n';
  for (const SweepRecord& r : result.records) {
    os << format_number(r.omega_bar_mhz) << ',' << format_number(r.cold.gate_time_us) << ','
       << format_number(r.cold.e_decay) << ',' << format_number(r.cold.e_blockade) << ','
       << format_number(r.cold.e_two_photon) << ',' << format_number(r.cold.total) << ','
       << format_number(r.warm.e_decay) << ',' << format_number(r.warm.total) << ','
       << format_number(r.cold.phi) << '\n';
  }
  return os.str();
}

json cmd_budget(const RunConfig& config) {
  RunConfig c = config;
  c.resolve();
  const DriveParams drive = resolve_drive(c);
  PhysicalParams params = resolve_params(c);
  params.n_atoms = 3;
  json out = {{"config", to_json(c)},
              {"budget", budget_json(total_error(drive, params, c.lifetime_us()))},
              {"budget_4.2K", budget_json(total_error(drive, params, Temperature::k4_2))},
              {"budget_300K", budget_json(total_error(drive, params, Temperature::k300))}};
  const std::array<double, 8> table = dwell_table(drive);
  out["dwell_table_us"] = per_input({table.begin(), table.end()}, 3);
  return out;
}

json cmd_phase(const RunConfig& config) {
  RunConfig c = config;
  c.resolve();
  const DriveParams drive = resolve_drive(c);
  const double v = resolve_params(c).blockade_shift();
  const double phi = phase_phi(drive, v);
  json solutions = json::array();
  for (int n = 1; n <= c.phase_max_n; ++n) {
    const double ob = solve_phase_matching(n, v);
    const DriveParams matched = DriveParams::from_ratio(drive.omega0, ob, drive.omega2 / drive.omega1);
    solutions.push_back({{"N", n}, {"omega_bar_MHz", angular_to_mhz(ob)}, {"phi_rad", phase_phi(matched, v)}});
  }
  return {{"config", to_json(c)},
          {"V_MHz", angular_to_mhz(v)},
          {"window_us", residue_window(drive)},
          {"phi_rad", phi},
          {"phi_over_pi", phi / std::numbers::pi},
          {"solutions", solutions}};
}

}  // namespace rydberg::cli
