#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "entpower/types.hpp"

namespace entpower::zoo
{

/// Odd layers act on pairs (1,2),(3,4),...; even layers on (2,3),(4,5),...
/// Open boundary: no (N,1) pair.
enum class LayerParity
{
	Odd,
	Even
};

std::vector<std::pair<int, int>> bond_pairs(int num_qubits, LayerParity parity);

/// Product of `gate` embedded on every bond of the given parity. The bonds
/// are disjoint so their order does not matter.
UnitaryMatrix layer_unitary(int num_qubits, LayerParity parity, const UnitaryMatrix& gate);

UnitaryMatrix identity(int num_qubits);

/// diag(1, ..., 1, e^{i phi}).
UnitaryMatrix diag_single_phase(int num_qubits, double phi);

/// diag(e^{i phi_k}) with phi_k ~ Normal(0, 1), drawn from `seed`.
UnitaryMatrix diag_random(int num_qubits, std::uint64_t seed);

/// Two-qubit rotation in span{|01>, |10>}:
/// |00><00| + |11><11| + cos l (|01><01| + |10><10|) + sin l (|01><10| - |10><01|).
UnitaryMatrix u_lambda(double lambda);

/// Even-N construction: (odd layer) * (even layer) of u_lambda gates. The
/// even layer acts first on a state.
UnitaryMatrix und_even(int num_qubits, double lambda);

/// Phase used in the orthonormal two-qubit basis of u_w(). Only MinusOne
/// (omega = e^{i pi}) yields an orthonormal basis; CubeRoot (e^{2 pi i/3}) is
/// accepted as input and rejected by the unitarity check.
enum class OmegaVariant
{
	MinusOne,
	CubeRoot
};

UnitaryMatrix u_w(OmegaVariant omega = OmegaVariant::MinusOne);

struct OddInner
{
	enum class Kind
	{
		UwExact,
		Haar
	} kind = Kind::UwExact;
	std::uint64_t seed = 0;
	OmegaVariant omega = OmegaVariant::MinusOne;
};

/// Odd-N construction: (odd layer, i <= N-1) * (even layer, i < N-1) * W,
/// with W on sites (N-1, N). W acts first on a state.
UnitaryMatrix und_odd(int num_qubits, double lambda, const OddInner& inner = {});

/// 1/2 (sigma^y x sigma^x - sigma^x x sigma^y)
Matrix dm_bond();
/// sigma^x x sigma^x + sigma^y x sigma^y + sigma^z x sigma^z
Matrix heisenberg_bond();

HermitianMatrix bond_hamiltonian(int num_qubits, LayerParity parity, const Matrix& bond);
HermitianMatrix dm_hamiltonian(int num_qubits, LayerParity parity);
HermitianMatrix heisenberg_hamiltonian(int num_qubits, LayerParity parity);

/// e^{-i H_DM^odd t} e^{-i H_DM^even t}, even N >= 4.
UnitaryMatrix u_dm(int num_qubits, double t);
/// e^{-i H_DM^odd t} e^{-i H_H^even t}, odd N >= 3.
UnitaryMatrix u_dm_h(int num_qubits, double t);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the
/// diagonal phases of R moved into Q.
UnitaryMatrix haar_random(std::ptrdiff_t dim, std::uint64_t seed);

} // namespace entpower::zoo
