#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "entpower/types.hpp"
#include "entpower/zoo.hpp"

namespace entpower::brickwork
{

struct FixedGate
{
	Matrix gate; // 4x4 unitary
};

/// One explicit 4x4 gate per bond, in bond order.
struct FixedPerBond
{
	std::vector<Matrix> gates;
};

/// Bond gate exp(-i h t) from a 4x4 Hermitian bond term.
struct HamiltonianGate
{
	Matrix bond;
	double t = 0.0;
};

/// One Haar draw reused on every bond of the layer.
struct HaarShared
{
	std::uint64_t seed = 0;
};

/// Independent Haar draw per bond, seeded by (seed, bond index).
struct HaarPerBond
{
	std::uint64_t seed = 0;
};

using GateSource = std::variant<FixedGate, FixedPerBond, HamiltonianGate, HaarShared, HaarPerBond>;

struct LayerSpec
{
	zoo::LayerParity parity = zoo::LayerParity::Odd;
	GateSource gate;
};

/// Layers are listed in the order they act on a state: `layers.front()` is
/// applied first, so as a matrix it is the rightmost factor.
struct CircuitSpec
{
	int num_qubits = 0;
	std::vector<LayerSpec> layers;
};

/// The 4x4 gate placed on bond `bond_index` of a layer.
UnitaryMatrix bond_gate(const GateSource& source, std::size_t bond_index);

UnitaryMatrix layer_unitary(int num_qubits, const LayerSpec& layer);

/// U = L_k ... L_2 L_1 for layers [L_1, ..., L_k].
UnitaryMatrix build_circuit_unitary(const CircuitSpec& c);

/// Circuit of U^dagger: layers reversed, each bond gate conjugate-transposed.
CircuitSpec adjoint_circuit(const CircuitSpec& c);

} // namespace entpower::brickwork
