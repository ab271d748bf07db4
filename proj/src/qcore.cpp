#include "rydberg/qcore.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace rydberg {

Level parse_level(std::string_view symbol) {
  if (symbol == "g0" || symbol == "0") return Level::g0;
  if (symbol == "g1" || symbol == "1") return Level::g1;
  if (symbol == "r") return Level::r;
  throw ConstructionError("invalid atom level symbol '" + std::string(symbol) + "'");
}

std::string_view level_symbol(Level level) {
  switch (level) {
    case Level::g0: return "0";
    case Level::g1: return "1";
    case Level::r: return "r";
  }
  throw ConstructionError("invalid atom level code");
}

std::size_t hilbert_dimension(int n_atoms) {
  if (n_atoms < 1) throw ConstructionError("register must hold at least one atom");
  std::size_t dim = 1;
  for (int k = 0; k < n_atoms; ++k) dim *= kLevelsPerAtom;
  return dim;
}

std::size_t basis_index(std::span<const Level> levels) {
  if (levels.empty()) throw ConstructionError("empty level list");
  std::size_t index = 0;
  for (Level level : levels) {
    const int code = static_cast<int>(level);
    if (code < 0 || code >= kLevelsPerAtom) throw ConstructionError("invalid atom level code");
    index = index * kLevelsPerAtom + static_cast<std::size_t>(code);
  }
  return index;
}

std::vector<Level> basis_levels(std::size_t index, int n_atoms) {
  if (index >= hilbert_dimension(n_atoms)) {
    throw ConstructionError("basis index " + std::to_string(index) + " out of range");
  }
  std::vector<Level> levels(static_cast<std::size_t>(n_atoms));
  for (int k = n_atoms - 1; k >= 0; --k) {
    levels[static_cast<std::size_t>(k)] = static_cast<Level>(index % kLevelsPerAtom);
    index /= kLevelsPerAtom;
  }
  return levels;
}

std::size_t computational_to_full(std::size_t qubit_index, int n_atoms) {
  if (qubit_index >= (std::size_t{1} << n_atoms)) {
    throw ConstructionError("computational index out of range");
  }
  std::size_t index = 0;
  for (int k = n_atoms - 1; k >= 0; --k) {
    const std::size_t bit = (qubit_index >> k) & 1U;
    index = index * kLevelsPerAtom + bit;
  }
  return index;
}

std::vector<std::size_t> computational_indices(int n_atoms) {
  std::vector<std::size_t> out;
  const std::size_t count = std::size_t{1} << n_atoms;
  out.reserve(count);
  for (std::size_t q = 0; q < count; ++q) out.push_back(computational_to_full(q, n_atoms));
  return out;
}

std::string ket_label(std::size_t index, int n_atoms) {
  std::string label;
  for (Level level : basis_levels(index, n_atoms)) label += level_symbol(level);
  return label;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

double unitarity_error(const ComplexMatrix& u) {
  const ComplexMatrix gram = u.adjoint() * u;
  return (gram - ComplexMatrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

ComplexMatrix matrix_exponential(const ComplexMatrix& hamiltonian, double t) {
  if (hamiltonian.rows() != hamiltonian.cols()) {
    throw ConstructionError("matrix exponential needs a square matrix");
  }
  if (!std::isfinite(t) || t < 0.0) throw DomainError("evolution time must be finite and >= 0");
  if (!hamiltonian.allFinite()) throw NumericalError("non-finite Hamiltonian entry");

  ComplexMatrix out;
  if (is_hermitian(hamiltonian)) {
    const ComplexMatrix symmetric = 0.5 * (hamiltonian + hamiltonian.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(symmetric);
    if (solver.info() != Eigen::Success) throw NumericalError("eigendecomposition failed");
    const Eigen::VectorXd& energies = solver.eigenvalues();
    StateVector phases(energies.size());
    for (Eigen::Index k = 0; k < energies.size(); ++k) phases(k) = std::exp(-kI * energies(k) * t);
    const ComplexMatrix& vecs = solver.eigenvectors();
    out = vecs * phases.asDiagonal() * vecs.adjoint();
  } else {
    const ComplexMatrix generator = (-kI * t) * hamiltonian;
    out = generator.exp();
  }
  if (!out.allFinite()) throw NumericalError("non-finite matrix exponential");
  return out;
}

ComplexMatrix embed_single_atom(const ComplexMatrix& op, int atom, int n_atoms) {
  if (op.rows() != kLevelsPerAtom || op.cols() != kLevelsPerAtom) {
    throw ConstructionError("single-atom operator must be 3x3");
  }
  if (atom < 0 || atom >= n_atoms) throw ConstructionError("atom index outside register");
  const ComplexMatrix id = ComplexMatrix::Identity(kLevelsPerAtom, kLevelsPerAtom);
  ComplexMatrix out = (atom == 0) ? op : id;
  for (int k = 1; k < n_atoms; ++k) out = tensor_product(out, k == atom ? op : id);
  return out;
}

ComplexMatrix level_projector(Level row, Level col) {
  ComplexMatrix out = ComplexMatrix::Zero(kLevelsPerAtom, kLevelsPerAtom);
  out(static_cast<int>(row), static_cast<int>(col)) = 1.0;
  return out;
}

}  // namespace rydberg
