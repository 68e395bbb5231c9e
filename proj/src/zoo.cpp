#include "entpower/zoo.hpp"

#include <cmath>
#include <string>

#include <Eigen/QR>

#include "entpower/random.hpp"
#include "entpower/tensor.hpp"

namespace entpower::zoo
{

namespace
{

void check_qubits(int n, int min_n = 2)
{
	if(n < min_n || n > 30)
		throw DimensionError("qubit count " + std::to_string(n) + " out of range");
}

Matrix layer_matrix(int n, LayerParity parity, const Matrix& gate)
{
	Matrix m = Matrix::Identity(std::ptrdiff_t{1} << n, std::ptrdiff_t{1} << n);
	for(auto [i, j] : bond_pairs(n, parity))
		tensor::apply_gate_left(m, gate, i, j, n);
	return m;
}

// v_t = -b|0> + a|1> for v = a|0> + b|1>.
Vector orthogonal_partner(const Vector& v)
{
	Vector out(2);
	out << -v[1], v[0];
	return out;
}

Vector basis1(int bit)
{
	Vector e = Vector::Zero(2);
	e[bit] = 1.0;
	return e;
}

} // namespace

std::vector<std::pair<int, int>> bond_pairs(int num_qubits, LayerParity parity)
{
	std::vector<std::pair<int, int>> out;
	const int first = parity == LayerParity::Odd ? 1 : 2;
	for(int i = first; i + 1 <= num_qubits; i += 2)
		out.emplace_back(i, i + 1);
	return out;
}

UnitaryMatrix layer_unitary(int num_qubits, LayerParity parity, const UnitaryMatrix& gate)
{
	check_qubits(num_qubits);
	if(gate.dim() != 4)
		throw DimensionError("layer gate must be 4x4");
	if(bond_pairs(num_qubits, parity).empty())
		throw std::invalid_argument("layer has no bonds for this qubit count");
	return UnitaryMatrix(layer_matrix(num_qubits, parity, gate.matrix()));
}

UnitaryMatrix identity(int num_qubits)
{
	check_qubits(num_qubits, 1);
	return UnitaryMatrix(tensor::identity(std::ptrdiff_t{1} << num_qubits));
}

UnitaryMatrix diag_single_phase(int num_qubits, double phi)
{
	check_qubits(num_qubits);
	const std::ptrdiff_t dim = std::ptrdiff_t{1} << num_qubits;
	Matrix m = Matrix::Identity(dim, dim);
	m(dim - 1, dim - 1) = std::polar(1.0, phi);
	return UnitaryMatrix(std::move(m));
}

UnitaryMatrix diag_random(int num_qubits, std::uint64_t seed)
{
	check_qubits(num_qubits);
	const std::ptrdiff_t dim = std::ptrdiff_t{1} << num_qubits;
	Rng rng(seed);
	Matrix m = Matrix::Zero(dim, dim);
	for(std::ptrdiff_t k = 0; k < dim; ++k)
		m(k, k) = std::polar(1.0, rng.normal());
	return UnitaryMatrix(std::move(m));
}

UnitaryMatrix u_lambda(double lambda)
{
	const double c = std::cos(lambda);
	const double s = std::sin(lambda);
	Matrix m = Matrix::Zero(4, 4);
	m(0, 0) = 1.0;
	m(3, 3) = 1.0;
	m(1, 1) = c;
	m(2, 2) = c;
	m(1, 2) = s;  // |01><10|
	m(2, 1) = -s; // -|10><01|
	return UnitaryMatrix(std::move(m));
}

UnitaryMatrix und_even(int num_qubits, double lambda)
{
	if(num_qubits < 4 || num_qubits % 2 != 0)
		throw DimensionError("und_even requires an even qubit count >= 4");
	const Matrix g = u_lambda(lambda).matrix();
	Matrix m = layer_matrix(num_qubits, LayerParity::Even, g);
	for(auto [i, j] : bond_pairs(num_qubits, LayerParity::Odd))
		tensor::apply_gate_left(m, g, i, j, num_qubits);
	return UnitaryMatrix(std::move(m));
}

UnitaryMatrix u_w(OmegaVariant omega)
{
	const Complex w = omega == OmegaVariant::MinusOne ? std::polar(1.0, kPi) : std::polar(1.0, 2.0 * kPi / 3.0);
	const double r3 = std::sqrt(3.0) / 2.0;
	Vector beta(2), gamma(2);
	beta << -0.5, r3;
	gamma << -0.5, -r3;
	const Vector beta_t = orthogonal_partner(beta);
	const Vector gamma_t = orthogonal_partner(gamma);
	const Vector e0 = basis1(0), e1 = basis1(1);
	const double inv = 1.0 / std::sqrt(2.0);

	const Vector w00 = inv * (tensor::kron(gamma, e1) + tensor::kron(beta, e0));
	const Vector w01 = inv * (w * w * tensor::kron(gamma, e1) + w * tensor::kron(beta, e0));
	const Vector w10 = inv * (tensor::kron(gamma_t, e1) + tensor::kron(beta_t, e0));
	const Vector w11 = inv * (w * w * tensor::kron(gamma_t, e1) + w * tensor::kron(beta_t, e0));

	Matrix m(4, 4);
	m.col(0) = Complex{0.0, -1.0} * w00;
	m.col(1) = w01;
	m.col(2) = w10;
	m.col(3) = w11;
	return UnitaryMatrix(std::move(m), 1e-12);
}

UnitaryMatrix und_odd(int num_qubits, double lambda, const OddInner& inner)
{
	if(num_qubits < 3 || num_qubits % 2 == 0)
		throw DimensionError("und_odd requires an odd qubit count >= 3");
	const int n = num_qubits;
	const UnitaryMatrix wgate = inner.kind == OddInner::Kind::UwExact ? u_w(inner.omega) : haar_random(4, inner.seed);
	const Matrix g = u_lambda(lambda).matrix();

	Matrix m = Matrix::Identity(std::ptrdiff_t{1} << n, std::ptrdiff_t{1} << n);
	tensor::apply_gate_left(m, wgate.matrix(), n - 1, n, n);
	for(int i = 2; i < n - 1; i += 2)
		tensor::apply_gate_left(m, g, i, i + 1, n);
	for(int i = 1; i <= n - 1; i += 2)
		tensor::apply_gate_left(m, g, i, i + 1, n);
	return UnitaryMatrix(std::move(m));
}

Matrix dm_bond()
{
	return 0.5 * (tensor::kron(tensor::pauli_y(), tensor::pauli_x()) - tensor::kron(tensor::pauli_x(), tensor::pauli_y()));
}

Matrix heisenberg_bond()
{
	using namespace tensor;
	return kron(pauli_x(), pauli_x()) + kron(pauli_y(), pauli_y()) + kron(pauli_z(), pauli_z());
}

HermitianMatrix bond_hamiltonian(int num_qubits, LayerParity parity, const Matrix& bond)
{
	check_qubits(num_qubits);
	const auto pairs = bond_pairs(num_qubits, parity);
	if(pairs.empty())
		throw std::invalid_argument("no bonds of this parity for the given qubit count");
	const std::ptrdiff_t dim = std::ptrdiff_t{1} << num_qubits;
	Matrix h = Matrix::Zero(dim, dim);
	for(auto [i, j] : pairs)
		h += tensor::embed_two_qubit_operator(bond, i, j, num_qubits);
	return HermitianMatrix(std::move(h));
}

HermitianMatrix dm_hamiltonian(int num_qubits, LayerParity parity)
{
	return bond_hamiltonian(num_qubits, parity, dm_bond());
}

HermitianMatrix heisenberg_hamiltonian(int num_qubits, LayerParity parity)
{
	return bond_hamiltonian(num_qubits, parity, heisenberg_bond());
}

UnitaryMatrix u_dm(int num_qubits, double t)
{
	if(num_qubits < 4 || num_qubits % 2 != 0)
		throw DimensionError("u_dm requires an even qubit count >= 4");
	const UnitaryMatrix odd = tensor::hermitian_expm(dm_hamiltonian(num_qubits, LayerParity::Odd), t);
	const UnitaryMatrix even = tensor::hermitian_expm(dm_hamiltonian(num_qubits, LayerParity::Even), t);
	return odd * even;
}

UnitaryMatrix u_dm_h(int num_qubits, double t)
{
	if(num_qubits < 3 || num_qubits % 2 == 0)
		throw DimensionError("u_dm_h requires an odd qubit count >= 3");
	const UnitaryMatrix odd = tensor::hermitian_expm(dm_hamiltonian(num_qubits, LayerParity::Odd), t);
	const UnitaryMatrix even = tensor::hermitian_expm(heisenberg_hamiltonian(num_qubits, LayerParity::Even), t);
	return odd * even;
}

UnitaryMatrix haar_random(std::ptrdiff_t dim, std::uint64_t seed)
{
	if(dim < 2)
		throw DimensionError("haar_random requires dim >= 2");
	Rng rng(seed);
	Matrix z(dim, dim);
	const double scale = 1.0 / std::sqrt(2.0);
	for(std::ptrdiff_t c = 0; c < dim; ++c)
		for(std::ptrdiff_t r = 0; r < dim; ++r)
		{
			const double re = rng.normal();
			const double im = rng.normal();
			z(r, c) = scale * Complex{re, im};
		}
	Eigen::HouseholderQR<Matrix> qr(z);
	Matrix q = qr.householderQ();
	const Matrix& r = qr.matrixQR();
	for(std::ptrdiff_t k = 0; k < dim; ++k)
	{
		const Complex rkk = r(k, k);
		const double mag = std::abs(rkk);
		q.col(k) *= mag > 0.0 ? rkk / mag : Complex{1.0};
	}
	return UnitaryMatrix(std::move(q));
}

} // namespace entpower::zoo
