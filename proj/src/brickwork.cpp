#include "entpower/brickwork.hpp"

#include <stdexcept>

#include "entpower/random.hpp"
#include "entpower/tensor.hpp"

namespace entpower::brickwork
{

namespace
{

template <class... Ts>
struct overloaded : Ts...
{
	using Ts::operator()...;
};

} // namespace

UnitaryMatrix bond_gate(const GateSource& source, std::size_t bond_index)
{
	return std::visit(
		overloaded{
			[](const FixedGate& g) { return UnitaryMatrix(g.gate); },
			[&](const FixedPerBond& g) {
				if(bond_index >= g.gates.size())
					throw std::invalid_argument("FixedPerBond has fewer gates than the layer has bonds");
				return UnitaryMatrix(g.gates[bond_index]);
			},
			[](const HamiltonianGate& g) { return tensor::hermitian_expm(HermitianMatrix(g.bond), g.t); },
			[](const HaarShared& g) { return zoo::haar_random(4, g.seed); },
			[&](const HaarPerBond& g) { return zoo::haar_random(4, derive_seed(g.seed, bond_index)); },
		},
		source);
}

UnitaryMatrix layer_unitary(int num_qubits, const LayerSpec& layer)
{
	const auto bonds = zoo::bond_pairs(num_qubits, layer.parity);
	if(bonds.empty())
		throw std::invalid_argument("layer has no bonds for this qubit count");
	const std::ptrdiff_t dim = std::ptrdiff_t{1} << num_qubits;
	Matrix m = Matrix::Identity(dim, dim);
	for(std::size_t b = 0; b < bonds.size(); ++b)
	{
		const UnitaryMatrix g = bond_gate(layer.gate, b);
		if(g.dim() != 4)
			throw DimensionError("bond gate must be 4x4");
		tensor::apply_gate_left(m, g.matrix(), bonds[b].first, bonds[b].second, num_qubits);
	}
	return UnitaryMatrix(std::move(m));
}

UnitaryMatrix build_circuit_unitary(const CircuitSpec& c)
{
	if(c.num_qubits < 2 || c.num_qubits > 30)
		throw DimensionError("circuit qubit count out of range");
	const std::ptrdiff_t dim = std::ptrdiff_t{1} << c.num_qubits;
	Matrix m = Matrix::Identity(dim, dim);
	for(const auto& layer : c.layers)
	{
		const auto bonds = zoo::bond_pairs(c.num_qubits, layer.parity);
		if(bonds.empty())
			throw std::invalid_argument("layer has no bonds for this qubit count");
		for(std::size_t b = 0; b < bonds.size(); ++b)
		{
			const UnitaryMatrix g = bond_gate(layer.gate, b);
			if(g.dim() != 4)
				throw DimensionError("bond gate must be 4x4");
			tensor::apply_gate_left(m, g.matrix(), bonds[b].first, bonds[b].second, c.num_qubits);
		}
	}
	return UnitaryMatrix(std::move(m));
}

CircuitSpec adjoint_circuit(const CircuitSpec& c)
{
	CircuitSpec out;
	out.num_qubits = c.num_qubits;
	for(auto it = c.layers.rbegin(); it != c.layers.rend(); ++it)
	{
		const auto bonds = zoo::bond_pairs(c.num_qubits, it->parity);
		FixedPerBond adj;
		for(std::size_t b = 0; b < bonds.size(); ++b)
			adj.gates.push_back(bond_gate(it->gate, b).adjoint().matrix());
		out.layers.push_back(LayerSpec{it->parity, std::move(adj)});
	}
	return out;
}

} // namespace entpower::brickwork
