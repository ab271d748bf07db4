#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "rydberg/errors.hpp"

namespace rydberg {

using Complex = std::complex<double>;

template <typename Scalar>
using ComplexMatrixT = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using StateVectorT = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

using ComplexMatrix = ComplexMatrixT<double>;
using StateVector = StateVectorT<double>;

inline constexpr Complex kI{0.0, 1.0};

// Default numerical tolerances. Callers may pass their own.
namespace tolerance {
inline constexpr double kHermitian = 1e-12;
inline constexpr double kUnitarity = 1e-10;
inline constexpr double kNorm = 1e-10;
}  // namespace tolerance

/// Single-atom level. The numeric value is the base-3 digit used in
/// product-basis indexing.
enum class Level : int { g0 = 0, g1 = 1, r = 2 };

inline constexpr int kLevelsPerAtom = 3;

Level parse_level(std::string_view symbol);
std::string_view level_symbol(Level level);

/// Number of product states for `n_atoms` three-level atoms (3^n).
std::size_t hilbert_dimension(int n_atoms);

/// Index = sum_k 3^(n-1-k) code(level_k); the first atom is the most
/// significant digit, matching the ket order |a1 a2 b>.
std::size_t basis_index(std::span<const Level> levels);
std::vector<Level> basis_levels(std::size_t index, int n_atoms);

/// Full-space index of the computational ket whose qubit bits are the
/// binary digits of `qubit_index` (first atom most significant).
std::size_t computational_to_full(std::size_t qubit_index, int n_atoms);

/// All computational kets in the qubit ordering |00..0>, |00..1>, ...
std::vector<std::size_t> computational_indices(int n_atoms);

/// Ket label such as "010" or "r1r".
std::string ket_label(std::size_t index, int n_atoms);

bool is_hermitian(const ComplexMatrix& m, double tol = tolerance::kHermitian);

/// max_ij |(U^dagger U - I)_ij|
double unitarity_error(const ComplexMatrix& u);

/// exp(-i H t). Hermitian H goes through an eigendecomposition and yields a
/// unitary; non-Hermitian H (effective decay) goes through Pade
/// scaling-and-squaring and yields a contraction.
ComplexMatrix matrix_exponential(const ComplexMatrix& hamiltonian, double t);

/// Kronecker product A (x) B with A acting on the more significant digit.
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> tensor_product(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Result = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Result out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Lifts a 3x3 single-atom operator to the n-atom product space, acting on
/// `atom` and as the identity elsewhere.
ComplexMatrix embed_single_atom(const ComplexMatrix& op, int atom, int n_atoms);

/// |row><col| on one atom as a 3x3 matrix.
ComplexMatrix level_projector(Level row, Level col);

}  // namespace rydberg
