// Command-line front end: synth | simulate | sweep | budget | phase.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rydberg/cli.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw rydberg::ConstructionError("cannot write '" + out_path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Pulse-level simulator and analytic error budget for Rydberg-blockade\n"
      "Deutsch, Toffoli and CNOT gates.\n\n"
      "Frequencies in the config are f = omega/2pi in MHz; internally\n"
      "omega = 2pi * f rad/us and times are in us."};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::optional<double> v_scale;
  std::optional<double> grid_step;
  std::optional<std::string> temperature;
  std::optional<std::string> gate;

  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--out", out_path, "write output to this file instead of stdout");
  app.add_option("--v-scale", v_scale, "multiply every van der Waals shift");
  app.add_option("--grid-step", grid_step, "sweep grid step in MHz (omega_bar/2pi)");
  app.add_option("--temperature", temperature, "4.2K or 300K (selects the Rydberg lifetime)");
  app.add_option("--gate", gate, "deutsch, toffoli or cnot");

  auto* synth = app.add_subcommand("synth", "list the pulse schedule and derived angles");
  auto* simulate = app.add_subcommand("simulate", "evolve the schedule and report fidelities");
  auto* sweep = app.add_subcommand("sweep", "analytic error budget versus omega_bar as CSV");
  auto* budget = app.add_subcommand("budget", "analytic error budget at the configured point");
  auto* phase = app.add_subcommand("phase", "residue phase and phase-matching solutions");
  for (auto* sub : {synth, simulate, sweep, budget, phase}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    rydberg::cli::RunConfig config;
    if (!config_path.empty()) config = rydberg::cli::load_config_file(config_path);
    if (gate) {
      config.gate = rydberg::cli::parse_gate(*gate);
      if (config.gate != rydberg::GateKind::deutsch) config.theta.reset();
    }
    if (v_scale) config.v_scale = *v_scale;
    if (grid_step) config.grid.step_mhz = *grid_step;
    if (temperature) {
      config.temperature = rydberg::parse_temperature(*temperature);
      config.tau_us.reset();
    }

    if (*synth) {
      const auto doc = rydberg::cli::cmd_synth(config, &std::cerr);
      emit(doc.dump(2) + "\n", out_path);
    } else if (*simulate) {
      emit(rydberg::cli::cmd_simulate(config).dump(2) + "\n", out_path);
    } else if (*sweep) {
      emit(rydberg::cli::cmd_sweep(config), out_path);
      config.resolve();
      const std::string echo = rydberg::cli::to_json(config).dump(2) + "\n";
      if (out_path.empty()) {
        std::cerr << echo;
      } else {
        emit(echo, out_path + ".config.json");
      }
    } else if (*budget) {
      emit(rydberg::cli::cmd_budget(config).dump(2) + "\n", out_path);
    } else if (*phase) {
      emit(rydberg::cli::cmd_phase(config).dump(2) + "\n", out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
