#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rydberg/model.hpp"

namespace rydberg {

struct SimulationOptions {
  /// Effective decay: adds -(i/2tau) per atom in |r>. nullopt disables it.
  std::optional<double> decay_lifetime_us;
  CcInteraction cc_interaction = CcInteraction::physical;
  /// Multiply the outputs of inputs whose controls both start in |0> by
  /// exp(-i phi), phi being the analytic residue phase.
  bool frame_correction = false;
  /// Dwell integration step in us; 0 picks shortest segment / 100. Must not
  /// exceed shortest segment / 50.
  double dwell_sampling_step_us = 0.0;
  double v_scale = 1.0;
  bool compute_dwell = true;

  InteractionModel interaction() const { return {cc_interaction, v_scale}; }
  /// Resolved dwell step for `schedule`; throws ConstructionError when the
  /// requested step is invalid.
  double dwell_step(const GateSchedule& schedule) const;
};

/// Per-input vectors are indexed by computational (qubit) index in the ket
/// order |00..0>, |00..1>, ...
struct SimulationResult {
  int n_atoms = 0;
  ComplexMatrix full_propagator;
  ComplexMatrix computational_block;
  std::vector<double> leakage_per_input;
  std::vector<double> dwell_per_input;
  std::vector<double> norm_loss_per_input;
  /// Phase removed by the frame correction (0 when disabled).
  double applied_phase = 0.0;
  /// Residual arg of the corrected |00..0> diagonal entry.
  double phase_mismatch = 0.0;
  double unitarity_error = 0.0;

  double mean_norm_loss() const;
};

/// Ordered product of exact segment exponentials.
SimulationResult evolve(const GateSchedule& schedule, const PhysicalParams& params,
                        const SimulationOptions& opts = {});

/// 2^n x 2^n restriction of the propagator, not renormalised.
const ComplexMatrix& computational_block(const SimulationResult& result);

/// Integrated sum_atoms P(atom in |r>) over the schedule for every
/// computational input, trapezoidal in time, decay off.
std::vector<double> rydberg_dwell_all(const GateSchedule& schedule, const PhysicalParams& params,
                                      const SimulationOptions& opts = {});
double rydberg_dwell(const GateSchedule& schedule, const PhysicalParams& params,
                     std::size_t qubit_input, const SimulationOptions& opts = {});

/// |<to|U|from>|^2 between computational kets.
double transition_probability(const SimulationResult& result, std::size_t from_qubit,
                              std::size_t to_qubit);

/// Population that leaves {input, input with the target bit flipped}, with
/// the control-control residue switched on, minus the same quantity with it
/// switched off. Isolates the loss caused by the residue during the control
/// pi pulses from the target-side two-photon and leakage channels.
double control_residue_loss(const GateSchedule& schedule, const PhysicalParams& params,
                            std::size_t qubit_input, SimulationOptions opts = {});

}  // namespace rydberg
