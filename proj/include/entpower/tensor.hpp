#pragma once

#include <span>
#include <vector>

#include "entpower/types.hpp"

namespace entpower::tensor
{

// Single-qubit constants.
Matrix identity(std::ptrdiff_t dim);
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

/// Operator acting as `gate` on qubits (i, j) (1-based, i < j) of an
/// N-qubit register and as identity elsewhere. The first tensor factor of
/// `gate` is qubit i.
UnitaryMatrix embed_two_qubit_gate(const UnitaryMatrix& gate, int i, int j, int num_qubits);

/// Same as above for an arbitrary (not necessarily unitary) 4x4 operator;
/// used to embed Hamiltonian bond terms.
Matrix embed_two_qubit_operator(const Matrix& op, int i, int j, int num_qubits);

/// m <- G_{ij} m for a 4x4 G on qubits (i, j), without forming the embedded
/// operator.
void apply_gate_left(Matrix& m, const Matrix& g, int i, int j, int num_qubits);

/// Single-site operator on qubit i (1-based).
Matrix embed_one_qubit_operator(const Matrix& op, int i, int num_qubits);

PureState apply_unitary(const UnitaryMatrix& u, const PureState& s);

/// Reduced state on the sites in `keep` (1-based, any order; result ordered
/// by increasing site index).
DensityMatrix partial_trace(const PureState& s, std::span<const int> keep);

/// Real eigenvalues sorted descending. Input with anti-Hermitian part
/// <= 1e-10 (Frobenius) is symmetrized; larger asymmetry throws.
RealVector hermitian_eigenvalues(const Matrix& h);
RealVector hermitian_eigenvalues(const HermitianMatrix& h);

/// exp(-i * sign * H * t) via the spectral decomposition of H.
UnitaryMatrix hermitian_expm(const HermitianMatrix& h, double t, int sign = 1);

// Named states.
PureState basis_state(int num_qubits, std::ptrdiff_t index);
PureState ghz_state(int num_qubits);
PureState w_state(int num_qubits);
/// |+>^N.
PureState plus_state(int num_qubits);
/// Product of single-qubit vectors (each normalized by the caller).
PureState product_state(std::span<const Vector> factors);

double frobenius_distance(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);

} // namespace entpower::tensor
