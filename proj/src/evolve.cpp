#include "rydberg/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rydberg/schedule.hpp"

namespace rydberg {

namespace {

Eigen::VectorXd rydberg_counts(int n_atoms) {
  const std::size_t dim = hilbert_dimension(n_atoms);
  Eigen::VectorXd counts(static_cast<Eigen::Index>(dim));
  for (std::size_t idx = 0; idx < dim; ++idx) {
    int excited = 0;
    for (Level level : basis_levels(idx, n_atoms)) excited += (level == Level::r);
    counts(static_cast<Eigen::Index>(idx)) = excited;
  }
  return counts;
}

double shortest_segment(const GateSchedule& schedule) {
  double shortest = std::numeric_limits<double>::infinity();
  for (const PulseSegment& seg : schedule.segments) shortest = std::min(shortest, seg.duration_us);
  return shortest;
}

// Inputs whose controls both start in |0>; these are the ones that visit the
// doubly excited control state.
bool controls_start_in_zero(std::size_t qubit_input, int n_atoms) {
  if (n_atoms != 3) return false;
  return (qubit_input >> 1) == 0;
}

}  // namespace

double SimulationOptions::dwell_step(const GateSchedule& schedule) const {
  if (schedule.segments.empty()) return 0.0;
  const double shortest = shortest_segment(schedule);
  if (dwell_sampling_step_us == 0.0) return shortest / 100.0;
  if (!(dwell_sampling_step_us > 0.0) || dwell_sampling_step_us > shortest / 50.0) {
    throw ConstructionError("dwell sampling step must be positive and at most 1/50 of the shortest segment");
  }
  return dwell_sampling_step_us;
}

double SimulationResult::mean_norm_loss() const {
  if (norm_loss_per_input.empty()) return 0.0;
  double sum = 0.0;
  for (double v : norm_loss_per_input) sum += v;
  return sum / static_cast<double>(norm_loss_per_input.size());
}

SimulationResult evolve(const GateSchedule& schedule, const PhysicalParams& params,
                        const SimulationOptions& opts) {
  schedule.validate();
  params.validate();
  if (schedule.n_atoms != params.n_atoms) {
    throw ConstructionError("schedule register size does not match physical parameters");
  }
  if (!(opts.v_scale > 0.0)) throw ConstructionError("v_scale must be positive");

  const int n = params.n_atoms;
  const auto dim = static_cast<Eigen::Index>(hilbert_dimension(n));
  const InteractionModel interaction = opts.interaction();

  ComplexMatrix decay = ComplexMatrix::Zero(dim, dim);
  if (opts.decay_lifetime_us) decay = decay_operator(n, *opts.decay_lifetime_us);

  ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
  for (const PulseSegment& seg : schedule.segments) {
    const ComplexMatrix h = segment_hamiltonian(seg, params, interaction) + decay;
    u = matrix_exponential(h, seg.duration_us) * u;
  }
  if (!u.allFinite()) throw NumericalError("non-finite propagator");

  SimulationResult result;
  result.n_atoms = n;
  result.full_propagator = u;
  result.unitarity_error = unitarity_error(u);

  const std::vector<std::size_t> comp = computational_indices(n);
  const auto n_comp = static_cast<Eigen::Index>(comp.size());
  result.computational_block.resize(n_comp, n_comp);
  for (Eigen::Index i = 0; i < n_comp; ++i) {
    for (Eigen::Index j = 0; j < n_comp; ++j) {
      result.computational_block(i, j) = u(static_cast<Eigen::Index>(comp[i]), static_cast<Eigen::Index>(comp[j]));
    }
  }

  for (Eigen::Index j = 0; j < n_comp; ++j) {
    const double in_block = result.computational_block.col(j).squaredNorm();
    const double total = u.col(static_cast<Eigen::Index>(comp[j])).squaredNorm();
    result.leakage_per_input.push_back(std::clamp(1.0 - in_block, 0.0, 1.0));
    result.norm_loss_per_input.push_back(std::max(0.0, 1.0 - total));
  }

  if (opts.frame_correction && n == 3) {
    result.applied_phase = residue_phase(schedule, pair_shift(params, 0, 1, interaction));
    const Complex correction = std::exp(-kI * result.applied_phase);
    for (Eigen::Index j = 0; j < n_comp; ++j) {
      if (controls_start_in_zero(static_cast<std::size_t>(j), n)) result.computational_block.col(j) *= correction;
    }
  }
  result.phase_mismatch = std::arg(result.computational_block(0, 0));

  if (opts.compute_dwell) result.dwell_per_input = rydberg_dwell_all(schedule, params, opts);
  return result;
}

const ComplexMatrix& computational_block(const SimulationResult& result) {
  return result.computational_block;
}

std::vector<double> rydberg_dwell_all(const GateSchedule& schedule, const PhysicalParams& params,
                                      const SimulationOptions& opts) {
  schedule.validate();
  params.validate();
  if (schedule.n_atoms != params.n_atoms) {
    throw ConstructionError("schedule register size does not match physical parameters");
  }
  const int n = params.n_atoms;
  const auto dim = static_cast<Eigen::Index>(hilbert_dimension(n));
  const std::vector<std::size_t> comp = computational_indices(n);
  const auto n_comp = static_cast<Eigen::Index>(comp.size());
  const Eigen::VectorXd counts = rydberg_counts(n);
  const double step = opts.dwell_step(schedule);
  const InteractionModel interaction = opts.interaction();

  ComplexMatrix states = ComplexMatrix::Zero(dim, n_comp);
  for (Eigen::Index j = 0; j < n_comp; ++j) states(static_cast<Eigen::Index>(comp[j]), j) = 1.0;

  auto excitation = [&](const ComplexMatrix& psi) -> Eigen::RowVectorXd {
    return counts.transpose() * psi.cwiseAbs2();
  };

  Eigen::RowVectorXd dwell = Eigen::RowVectorXd::Zero(n_comp);
  Eigen::RowVectorXd previous = excitation(states);
  for (const PulseSegment& seg : schedule.segments) {
    const auto n_steps = static_cast<int>(std::ceil(seg.duration_us / step - 1e-9));
    const double dt = seg.duration_us / n_steps;
    const ComplexMatrix u_step = matrix_exponential(segment_hamiltonian(seg, params, interaction), dt);
    for (int k = 0; k < n_steps; ++k) {
      states = u_step * states;
      const Eigen::RowVectorXd current = excitation(states);
      dwell += 0.5 * dt * (previous + current);
      previous = current;
    }
  }
  return {dwell.data(), dwell.data() + dwell.size()};
}

double rydberg_dwell(const GateSchedule& schedule, const PhysicalParams& params,
                     std::size_t qubit_input, const SimulationOptions& opts) {
  const std::vector<double> all = rydberg_dwell_all(schedule, params, opts);
  if (qubit_input >= all.size()) throw ConstructionError("input ket outside computational space");
  return all[qubit_input];
}

double transition_probability(const SimulationResult& result, std::size_t from_qubit,
                              std::size_t to_qubit) {
  const auto n = static_cast<std::size_t>(result.computational_block.cols());
  if (from_qubit >= n || to_qubit >= n) throw ConstructionError("ket outside computational space");
  return std::norm(result.computational_block(static_cast<Eigen::Index>(to_qubit),
                                              static_cast<Eigen::Index>(from_qubit)));
}

double control_residue_loss(const GateSchedule& schedule, const PhysicalParams& params,
                            std::size_t qubit_input, SimulationOptions opts) {
  opts.compute_dwell = false;
  opts.decay_lifetime_us.reset();
  const std::size_t partner = qubit_input ^ 1U;
  auto loss = [&](CcInteraction cc) {
    opts.cc_interaction = cc;
    const SimulationResult r = evolve(schedule, params, opts);
    return 1.0 - transition_probability(r, qubit_input, qubit_input) -
           transition_probability(r, qubit_input, partner);
  };
  return loss(CcInteraction::physical) - loss(CcInteraction::none);
}

}  // namespace rydberg
