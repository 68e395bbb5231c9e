#include "entpower/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace entpower
{

int qubits_for_dim(std::ptrdiff_t dim)
{
	if(dim < 2 || (dim & (dim - 1)) != 0)
		throw DimensionError("dimension " + std::to_string(dim) + " is not a power of two >= 2");
	int n = 0;
	while((std::ptrdiff_t{1} << n) < dim)
		++n;
	return n;
}

PureState::PureState(int num_qubits, Vector amps, double norm_tol)
	: num_qubits_{num_qubits}, amps_{std::move(amps)}
{
	if(num_qubits < 1 || num_qubits > 30)
		throw DimensionError("qubit count out of range");
	if(amps_.size() != (std::ptrdiff_t{1} << num_qubits))
		throw DimensionError("amplitude vector length must be 2^N");
	const double norm2 = amps_.squaredNorm();
	if(std::abs(norm2 - 1.0) > norm_tol)
		throw InvariantError("state is not normalized (|psi|^2 = " + std::to_string(norm2) + ")");
}

PureState::PureState(Vector amps, double norm_tol) : PureState(qubits_for_dim(amps.size()), amps, norm_tol) {}

UnitaryMatrix::UnitaryMatrix(Matrix m, double tol) : m_{std::move(m)}
{
	if(m_.rows() != m_.cols())
		throw DimensionError("unitary must be square");
	qubits_for_dim(m_.rows());
	const Matrix prod = m_ * m_.adjoint();
	const double err = (prod - Matrix::Identity(m_.rows(), m_.cols())).norm();
	if(!(err <= tol))
		throw InvariantError("matrix is not unitary (|UU^dagger - I|_F = " + std::to_string(err) + ")");
}

UnitaryMatrix UnitaryMatrix::adjoint() const
{
	return UnitaryMatrix(Matrix(m_.adjoint()), Trusted{});
}

bool UnitaryMatrix::is_diagonal(double tol) const
{
	for(Eigen::Index c = 0; c < m_.cols(); ++c)
		for(Eigen::Index r = 0; r < m_.rows(); ++r)
			if(r != c && std::abs(m_(r, c)) > tol)
				return false;
	return true;
}

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b)
{
	if(a.dim() != b.dim())
		throw DimensionError("unitary product dimension mismatch");
	return UnitaryMatrix(Matrix(a.m_ * b.m_), UnitaryMatrix::Trusted{});
}

HermitianMatrix::HermitianMatrix(Matrix m, double tol) : m_{std::move(m)}
{
	if(m_.rows() != m_.cols())
		throw DimensionError("Hermitian matrix must be square");
	const double err = (m_ - m_.adjoint()).norm();
	if(!(err <= tol))
		throw InvariantError("matrix is not Hermitian (|H - H^dagger|_F = " + std::to_string(err) + ")");
}

DensityMatrix::DensityMatrix(Matrix m, double tol) : m_{std::move(m)}
{
	if(m_.rows() != m_.cols())
		throw DimensionError("density matrix must be square");
	if((m_ - m_.adjoint()).norm() > tol)
		throw InvariantError("density matrix is not Hermitian");
	if(std::abs(m_.trace() - Complex{1.0, 0.0}) > tol)
		throw InvariantError("density matrix trace is not 1");
	const RealVector ev = tensor::hermitian_eigenvalues(m_);
	if(ev.size() > 0 && ev[ev.size() - 1] < -1e-10)
		throw InvariantError("density matrix has a negative eigenvalue");
}

namespace tensor
{

Matrix identity(std::ptrdiff_t dim) { return Matrix::Identity(dim, dim); }

Matrix pauli_x()
{
	Matrix m(2, 2);
	m << 0, 1, 1, 0;
	return m;
}

Matrix pauli_y()
{
	Matrix m(2, 2);
	m << 0, Complex{0, -1}, Complex{0, 1}, 0;
	return m;
}

Matrix pauli_z()
{
	Matrix m(2, 2);
	m << 1, 0, 0, -1;
	return m;
}

Matrix kron(const Matrix& a, const Matrix& b)
{
	Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
	for(Eigen::Index i = 0; i < a.rows(); ++i)
		for(Eigen::Index j = 0; j < a.cols(); ++j)
			out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
	return out;
}

Vector kron(const Vector& a, const Vector& b)
{
	Vector out(a.size() * b.size());
	for(Eigen::Index i = 0; i < a.size(); ++i)
		out.segment(i * b.size(), b.size()) = a[i] * b;
	return out;
}

Matrix embed_two_qubit_operator(const Matrix& op, int i, int j, int num_qubits)
{
	if(op.rows() != 4 || op.cols() != 4)
		throw DimensionError("two-qubit operator must be 4x4");
	if(num_qubits < 2 || num_qubits > 30)
		throw DimensionError("qubit count out of range");
	if(i < 1 || j < 1 || i > num_qubits || j > num_qubits)
		throw std::out_of_range("site index out of range");
	if(i >= j)
		throw std::invalid_argument("embed_two_qubit_gate requires i < j");

	const std::ptrdiff_t dim = std::ptrdiff_t{1} << num_qubits;
	const int shift_i = num_qubits - i;
	const int shift_j = num_qubits - j;
	const std::ptrdiff_t mask = (std::ptrdiff_t{1} << shift_i) | (std::ptrdiff_t{1} << shift_j);

	Matrix out = Matrix::Zero(dim, dim);
	for(std::ptrdiff_t col = 0; col < dim; ++col)
	{
		const int in_pair = static_cast<int>(((col >> shift_i) & 1) << 1 | ((col >> shift_j) & 1));
		const std::ptrdiff_t rest = col & ~mask;
		for(int out_pair = 0; out_pair < 4; ++out_pair)
		{
			const Complex v = op(out_pair, in_pair);
			if(v == Complex{})
				continue;
			const std::ptrdiff_t row = rest | (std::ptrdiff_t((out_pair >> 1) & 1) << shift_i) |
			                           (std::ptrdiff_t(out_pair & 1) << shift_j);
			out(row, col) = v;
		}
	}
	return out;
}

UnitaryMatrix embed_two_qubit_gate(const UnitaryMatrix& gate, int i, int j, int num_qubits)
{
	return UnitaryMatrix(embed_two_qubit_operator(gate.matrix(), i, j, num_qubits));
}

void apply_gate_left(Matrix& m, const Matrix& g, int i, int j, int num_qubits)
{
	if(g.rows() != 4 || g.cols() != 4)
		throw DimensionError("two-qubit operator must be 4x4");
	if(i < 1 || j < 1 || i > num_qubits || j > num_qubits || i == j)
		throw std::out_of_range("site index out of range");
	if(m.rows() != (std::ptrdiff_t{1} << num_qubits))
		throw DimensionError("matrix size does not match qubit count");
	const std::ptrdiff_t bi = std::ptrdiff_t{1} << (num_qubits - i);
	const std::ptrdiff_t bj = std::ptrdiff_t{1} << (num_qubits - j);
	const std::ptrdiff_t dim = m.rows();
	for(std::ptrdiff_t base = 0; base < dim; ++base)
	{
		if((base & bi) || (base & bj))
			continue;
		const std::ptrdiff_t rows[4] = {base, base | bj, base | bi, base | bi | bj};
		for(std::ptrdiff_t c = 0; c < m.cols(); ++c)
		{
			Complex in[4];
			for(int k = 0; k < 4; ++k)
				in[k] = m(rows[k], c);
			for(int r = 0; r < 4; ++r)
				m(rows[r], c) = g(r, 0) * in[0] + g(r, 1) * in[1] + g(r, 2) * in[2] + g(r, 3) * in[3];
		}
	}
}

Matrix embed_one_qubit_operator(const Matrix& op, int i, int num_qubits)
{
	if(op.rows() != 2 || op.cols() != 2)
		throw DimensionError("one-qubit operator must be 2x2");
	if(i < 1 || i > num_qubits)
		throw std::out_of_range("site index out of range");
	Matrix out = identity(std::ptrdiff_t{1} << (i - 1));
	out = kron(out, op);
	return kron(out, identity(std::ptrdiff_t{1} << (num_qubits - i)));
}

PureState apply_unitary(const UnitaryMatrix& u, const PureState& s)
{
	if(u.dim() != s.dim())
		throw DimensionError("unitary and state dimensions differ");
	return PureState(s.num_qubits(), Vector(u.matrix() * s.amps()));
}

DensityMatrix partial_trace(const PureState& s, std::span<const int> keep)
{
	const int n = s.num_qubits();
	std::vector<int> sites(keep.begin(), keep.end());
	std::sort(sites.begin(), sites.end());
	sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
	if(sites.empty() || static_cast<int>(sites.size()) >= n)
		throw std::invalid_argument("partial_trace: keep must be a nonempty strict subset of the sites");
	if(sites.front() < 1 || sites.back() > n)
		throw std::out_of_range("partial_trace: site index out of range");

	std::vector<int> traced;
	for(int q = 1; q <= n; ++q)
		if(!std::binary_search(sites.begin(), sites.end(), q))
			traced.push_back(q);

	const std::ptrdiff_t dk = std::ptrdiff_t{1} << sites.size();
	const std::ptrdiff_t dt = std::ptrdiff_t{1} << traced.size();
	Matrix m(dk, dt);
	for(std::ptrdiff_t idx = 0; idx < s.dim(); ++idx)
	{
		std::ptrdiff_t r = 0;
		for(int q : sites)
			r = (r << 1) | ((idx >> (n - q)) & 1);
		std::ptrdiff_t c = 0;
		for(int q : traced)
			c = (c << 1) | ((idx >> (n - q)) & 1);
		m(r, c) = s[idx];
	}
	Matrix rho = m * m.adjoint();
	rho = (0.5 * (rho + rho.adjoint())).eval();
	return DensityMatrix(std::move(rho));
}

RealVector hermitian_eigenvalues(const Matrix& h)
{
	if(h.rows() != h.cols())
		throw DimensionError("eigenvalues of a non-square matrix");
	const double asym = (h - h.adjoint()).norm();
	if(asym > 1e-10)
		throw InvariantError("hermitian_eigenvalues: input is not Hermitian");
	const Matrix sym = 0.5 * (h + h.adjoint());
	Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
	RealVector ev = es.eigenvalues();
	std::sort(ev.data(), ev.data() + ev.size(), std::greater<>());
	return ev;
}

RealVector hermitian_eigenvalues(const HermitianMatrix& h) { return hermitian_eigenvalues(h.matrix()); }

UnitaryMatrix hermitian_expm(const HermitianMatrix& h, double t, int sign)
{
	if(sign != 1 && sign != -1)
		throw std::invalid_argument("hermitian_expm: sign must be +1 or -1");
	Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix());
	const RealVector& ev = es.eigenvalues();
	Vector phases(ev.size());
	for(Eigen::Index k = 0; k < ev.size(); ++k)
		phases[k] = std::exp(Complex{0.0, -static_cast<double>(sign) * ev[k] * t});
	const Matrix& v = es.eigenvectors();
	return UnitaryMatrix(Matrix(v * phases.asDiagonal() * v.adjoint()));
}

PureState basis_state(int num_qubits, std::ptrdiff_t index)
{
	Vector a = Vector::Zero(std::ptrdiff_t{1} << num_qubits);
	if(index < 0 || index >= a.size())
		throw std::out_of_range("basis index out of range");
	a[index] = 1.0;
	return PureState(num_qubits, std::move(a));
}

PureState ghz_state(int num_qubits)
{
	Vector a = Vector::Zero(std::ptrdiff_t{1} << num_qubits);
	a[0] = a[a.size() - 1] = 1.0 / std::sqrt(2.0);
	return PureState(num_qubits, std::move(a));
}

PureState w_state(int num_qubits)
{
	Vector a = Vector::Zero(std::ptrdiff_t{1} << num_qubits);
	const double amp = 1.0 / std::sqrt(static_cast<double>(num_qubits));
	for(int q = 0; q < num_qubits; ++q)
		a[std::ptrdiff_t{1} << q] = amp;
	return PureState(num_qubits, std::move(a));
}

PureState plus_state(int num_qubits)
{
	const std::ptrdiff_t dim = std::ptrdiff_t{1} << num_qubits;
	return PureState(num_qubits, Vector::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim))));
}

PureState product_state(std::span<const Vector> factors)
{
	if(factors.empty())
		throw std::invalid_argument("product_state: no factors");
	Vector out = factors[0];
	for(std::size_t k = 1; k < factors.size(); ++k)
		out = kron(out, factors[k]);
	return PureState(static_cast<int>(factors.size()), std::move(out), 1e-10);
}

double frobenius_distance(const Matrix& a, const Matrix& b) { return (a - b).norm(); }

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

} // namespace tensor
} // namespace entpower
