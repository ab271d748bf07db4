#pragma once

#include "rydberg/model.hpp"

namespace rydberg {

struct IdealGate {
  ComplexMatrix matrix;
  GateKind kind = GateKind::deutsch;
  double theta = 0.0;  // Deutsch angle; pi/2 for Toffoli, unused for CNOT
};

/// Identity on |000>..|101> and D0 = [[i cos, sin], [sin, i cos]] on |110>, |111>.
IdealGate deutsch_ideal(double theta);
IdealGate toffoli_ideal();
IdealGate cnot_ideal();

enum class FidelityMode { trace, state_average };

/// trace: |Tr(U_ideal^dagger U_sim)| / d.
/// state_average: mean over basis inputs of |<ideal_out|sim_out>|^2.
/// Neither renormalises U_sim, so leakage lowers the value.
double gate_fidelity(const ComplexMatrix& simulated, const ComplexMatrix& ideal,
                     FidelityMode mode = FidelityMode::trace);

}  // namespace rydberg
