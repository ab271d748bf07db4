#pragma once

#include <numbers>
#include <vector>

#include "rydberg/qcore.hpp"

namespace rydberg {

/// Converts a frequency quoted as f = omega/2pi in MHz to rad/us.
constexpr double mhz_to_angular(double mhz) { return 2.0 * std::numbers::pi * mhz; }
constexpr double angular_to_mhz(double omega) { return omega / (2.0 * std::numbers::pi); }

/// Geometry and atomic constants. Atoms sit on a line with nearest-neighbour
/// spacing L: control 1 and control 2 flank the target, so the controls are
/// 2L apart. For a two-atom register the pair is (control, target).
struct PhysicalParams {
  double c6_over_2pi = -633.0;  // GHz um^6
  double spacing_um = 6.0;
  double lifetime_us = 1590.0;
  int n_atoms = 3;

  void validate() const;
  /// V = C6 / L^6 in rad/us.
  double blockade_shift() const;
};

/// How the control-control pair interacts while both controls are in |r>.
enum class CcInteraction { physical, none };

struct InteractionModel {
  CcInteraction cc = CcInteraction::physical;
  /// Multiplies every pair shift; used to approach the blockade limit.
  double v_scale = 1.0;
};

/// Van der Waals shift C6/d^6 in rad/us for C6/2pi in GHz um^6 and d in um.
double vdw_shift(double c6_over_2pi, double distance_um);

/// Drive on one atom between a ground level and |r>. The Hamiltonian term is
/// (rabi/2)|r><lower| + h.c., so rabi = i*Omega gives i*Omega(|r><lower| - h.c.)/2.
struct Transition {
  int atom = 0;
  Level lower = Level::g0;
  Complex rabi{0.0, 0.0};  // rad/us
};

/// Piecewise-constant drive held for `duration_us`.
struct PulseSegment {
  std::vector<Transition> transitions;
  double duration_us = 0.0;

  /// Throws ConstructionError on non-positive duration, a lower level that is
  /// not a ground state, or two couplings on the same (atom, lower) pair.
  void validate(int n_atoms) const;
};

enum class GateKind { deutsch, toffoli, cnot };

struct GateSchedule {
  GateKind kind = GateKind::deutsch;
  int n_atoms = 3;
  std::vector<PulseSegment> segments;

  double total_duration() const;
  void validate() const;
};

const char* gate_kind_name(GateKind kind);

/// Pair shift of a given pair of atoms after applying `model`. Atom indices
/// follow the ket order (controls first, target last).
double pair_shift(const PhysicalParams& params, int atom_a, int atom_b,
                  const InteractionModel& model = {});

/// Diagonal operator summing the pair shift of every pair of atoms that are
/// both in |r>.
ComplexMatrix interaction_operator(const PhysicalParams& params,
                                   const InteractionModel& model = {});

/// Drive terms plus interaction operator; Hermitian by construction.
ComplexMatrix segment_hamiltonian(const PulseSegment& segment, const PhysicalParams& params,
                                  const InteractionModel& model = {});

/// -(i/2tau) sum_atoms |r><r|: the anti-Hermitian part used for effective decay.
ComplexMatrix decay_operator(int n_atoms, double lifetime_us);

}  // namespace rydberg
