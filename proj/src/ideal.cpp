#include "rydberg/ideal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rydberg {

IdealGate deutsch_ideal(double theta) {
  if (!std::isfinite(theta)) throw DomainError("theta must be finite");
  ComplexMatrix m = ComplexMatrix::Identity(8, 8);
  const Complex diag = kI * std::cos(theta);
  const Complex off = std::sin(theta);
  m(6, 6) = diag;
  m(7, 7) = diag;
  m(6, 7) = off;
  m(7, 6) = off;
  return {m, GateKind::deutsch, theta};
}

IdealGate toffoli_ideal() {
  ComplexMatrix m = ComplexMatrix::Identity(8, 8);
  m(6, 6) = m(7, 7) = 0.0;
  m(6, 7) = m(7, 6) = 1.0;
  return {m, GateKind::toffoli, std::numbers::pi / 2};
}

IdealGate cnot_ideal() {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  m(2, 2) = m(3, 3) = 0.0;
  m(2, 3) = m(3, 2) = 1.0;
  return {m, GateKind::cnot, 0.0};
}

double gate_fidelity(const ComplexMatrix& simulated, const ComplexMatrix& ideal, FidelityMode mode) {
  if (simulated.rows() != ideal.rows() || simulated.cols() != ideal.cols() ||
      simulated.rows() != simulated.cols()) {
    throw ConstructionError("fidelity needs equal square matrices");
  }
  const auto d = static_cast<double>(ideal.cols());
  double f = 0.0;
  if (mode == FidelityMode::trace) {
    f = std::abs((ideal.adjoint() * simulated).trace()) / d;
  } else {
    for (Eigen::Index k = 0; k < ideal.cols(); ++k) {
      f += std::norm(ideal.col(k).dot(simulated.col(k)));
    }
    f /= d;
  }
  return std::clamp(f, 0.0, 1.0);
}

}  // namespace rydberg
