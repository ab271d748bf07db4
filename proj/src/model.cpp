#include "rydberg/model.hpp"

#include <cmath>
#include <set>
#include <utility>

namespace rydberg {

void PhysicalParams::validate() const {
  if (!(spacing_um > 0.0) || !std::isfinite(spacing_um)) {
    throw ConstructionError("lattice spacing must be positive");
  }
  if (!(lifetime_us > 0.0)) throw ConstructionError("Rydberg lifetime must be positive");
  if (!std::isfinite(c6_over_2pi)) throw ConstructionError("C6 must be finite");
  if (n_atoms != 2 && n_atoms != 3) throw ConstructionError("register must hold 2 or 3 atoms");
}

double PhysicalParams::blockade_shift() const { return vdw_shift(c6_over_2pi, spacing_um); }

double vdw_shift(double c6_over_2pi, double distance_um) {
  if (!(distance_um > 0.0)) throw DomainError("interatomic distance must be positive");
  // GHz -> MHz, then 2pi.
  return mhz_to_angular(1000.0 * c6_over_2pi / std::pow(distance_um, 6));
}

void PulseSegment::validate(int n_atoms) const {
  if (!(duration_us > 0.0) || !std::isfinite(duration_us)) {
    throw ConstructionError("segment duration must be positive");
  }
  std::set<std::pair<int, Level>> seen;
  for (const Transition& tr : transitions) {
    if (tr.atom < 0 || tr.atom >= n_atoms) throw ConstructionError("transition atom outside register");
    if (tr.lower == Level::r) throw ConstructionError("transition must start from a ground level");
    if (!std::isfinite(tr.rabi.real()) || !std::isfinite(tr.rabi.imag())) {
      throw ConstructionError("non-finite Rabi frequency");
    }
    if (!seen.emplace(tr.atom, tr.lower).second) {
      throw ConstructionError("duplicate coupling on atom " + std::to_string(tr.atom));
    }
  }
}

double GateSchedule::total_duration() const {
  double total = 0.0;
  for (const PulseSegment& seg : segments) total += seg.duration_us;
  return total;
}

void GateSchedule::validate() const {
  if (n_atoms != 2 && n_atoms != 3) throw ConstructionError("register must hold 2 or 3 atoms");
  for (const PulseSegment& seg : segments) seg.validate(n_atoms);
}

const char* gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::deutsch: return "deutsch";
    case GateKind::toffoli: return "toffoli";
    case GateKind::cnot: return "cnot";
  }
  return "unknown";
}

double pair_shift(const PhysicalParams& params, int atom_a, int atom_b,
                  const InteractionModel& model) {
  if (atom_a == atom_b) return 0.0;
  const double v = model.v_scale * params.blockade_shift();
  if (params.n_atoms == 2) return v;
  const int target = params.n_atoms - 1;
  if (atom_a == target || atom_b == target) return v;
  // Control-control pair sits at 2L.
  if (model.cc == CcInteraction::none) return 0.0;
  return model.v_scale * vdw_shift(params.c6_over_2pi, 2.0 * params.spacing_um);
}

ComplexMatrix interaction_operator(const PhysicalParams& params, const InteractionModel& model) {
  params.validate();
  const int n = params.n_atoms;
  const auto dim = static_cast<Eigen::Index>(hilbert_dimension(n));
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    const std::vector<Level> levels = basis_levels(static_cast<std::size_t>(idx), n);
    double shift = 0.0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (levels[a] == Level::r && levels[b] == Level::r) shift += pair_shift(params, a, b, model);
      }
    }
    out(idx, idx) = shift;
  }
  return out;
}

ComplexMatrix segment_hamiltonian(const PulseSegment& segment, const PhysicalParams& params,
                                  const InteractionModel& model) {
  segment.validate(params.n_atoms);
  ComplexMatrix h = interaction_operator(params, model);
  for (const Transition& tr : segment.transitions) {
    const ComplexMatrix single = 0.5 * tr.rabi * level_projector(Level::r, tr.lower) +
                                 0.5 * std::conj(tr.rabi) * level_projector(tr.lower, Level::r);
    h += embed_single_atom(single, tr.atom, params.n_atoms);
  }
  return h;
}

ComplexMatrix decay_operator(int n_atoms, double lifetime_us) {
  if (!(lifetime_us > 0.0)) throw ConstructionError("Rydberg lifetime must be positive");
  const auto dim = static_cast<Eigen::Index>(hilbert_dimension(n_atoms));
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    int excited = 0;
    for (Level level : basis_levels(static_cast<std::size_t>(idx), n_atoms)) excited += (level == Level::r);
    out(idx, idx) = -kI * (0.5 * excited / lifetime_us);
  }
  return out;
}

}  // namespace rydberg
