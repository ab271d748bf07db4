#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "rydberg/budget.hpp"
#include "rydberg/evolve.hpp"
#include "rydberg/schedule.hpp"

namespace rydberg::cli {

/// All frequencies are f = omega/2pi in MHz, as quoted in the literature.
/// Missing keys take the defaults below; the resolved values are echoed back
/// in every command's output.
struct RunConfig {
  GateKind gate = GateKind::deutsch;
  std::optional<double> theta;                     // rad, deutsch only
  std::optional<double> ratio_omega2_over_omega1;  // default 2 when theta absent
  double omega0_mhz = 10.0;
  double omega_bar_mhz = 0.54;
  std::optional<double> omega3_mhz;  // default omega_bar / sqrt2
  double c6_ghz_um6 = -633.0;
  double spacing_um = 6.0;
  std::optional<double> tau_us;  // overrides the temperature lifetime
  Temperature temperature = Temperature::k4_2;

  bool decay = false;
  CcInteraction cc_interaction = CcInteraction::physical;
  bool frame_correction = true;
  double v_scale = 1.0;
  double dwell_sampling_step_us = 0.0;

  SweepGrid grid;
  int phase_max_n = 4;

  /// Fills defaults and checks consistency (theta and ratio are exclusive).
  void resolve();
  double lifetime_us() const;
};

GateKind parse_gate(const std::string& name);
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config_file(const std::string& path);
nlohmann::json to_json(const RunConfig& config);

DriveParams resolve_drive(const RunConfig& config);
PhysicalParams resolve_params(const RunConfig& config);
SimulationOptions resolve_options(const RunConfig& config);
GateSchedule resolve_schedule(const RunConfig& config);

/// Schedule listing. When `human` is set a readable table is written there.
nlohmann::json cmd_synth(const RunConfig& config, std::ostream* human = nullptr);
nlohmann::json cmd_simulate(const RunConfig& config);
/// Header + one row per grid point, ascending omega_bar.
std::string cmd_sweep(const RunConfig& config);
nlohmann::json cmd_budget(const RunConfig& config);
nlohmann::json cmd_phase(const RunConfig& config);

inline constexpr const char* kSweepHeader =
    "omega_bar_MHz,T_g_us,E_decay_4K,E_bl,E_2ph,total_4K,E_decay_300K,total_300K,phi_rad";

}  // namespace rydberg::cli
