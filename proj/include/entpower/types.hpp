#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace entpower
{

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Largest register the dense kernels accept unless the caller raises the cap.
inline constexpr int kDefaultMaxQubits = 12;

inline constexpr double kPi = 3.14159265358979323846;

// Error hierarchy. Everything derives from std::invalid_argument or
// std::runtime_error so callers can catch broadly.
struct DimensionError : std::invalid_argument
{
	using std::invalid_argument::invalid_argument;
};

struct InvariantError : std::domain_error
{
	using std::domain_error::domain_error;
};

/// Number of qubits for a dimension that must be an exact power of two.
int qubits_for_dim(std::ptrdiff_t dim);

/// Normalized amplitude vector over N qubits. Index bits are big-endian:
/// qubit 1 is the most significant bit of the basis index.
class PureState
{
public:
	/// Validates length 2^N and unit norm (within `norm_tol`).
	PureState(int num_qubits, Vector amps, double norm_tol = 1e-12);

	/// Construct from any vector of length 2^N; rejects non-normalized input.
	explicit PureState(Vector amps, double norm_tol = 1e-12);

	[[nodiscard]] int num_qubits() const { return num_qubits_; }
	[[nodiscard]] std::ptrdiff_t dim() const { return amps_.size(); }
	[[nodiscard]] const Vector& amps() const { return amps_; }
	[[nodiscard]] Complex operator[](std::ptrdiff_t i) const { return amps_[i]; }

private:
	int num_qubits_;
	Vector amps_;
};

/// Square complex matrix verified to satisfy U U^dagger = I.
class UnitaryMatrix
{
public:
	explicit UnitaryMatrix(Matrix m, double tol = 1e-10);

	[[nodiscard]] std::ptrdiff_t dim() const { return m_.rows(); }
	[[nodiscard]] int num_qubits() const { return qubits_for_dim(m_.rows()); }
	[[nodiscard]] const Matrix& matrix() const { return m_; }
	[[nodiscard]] UnitaryMatrix adjoint() const;
	[[nodiscard]] bool is_diagonal(double tol = 1e-14) const;

	friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);

private:
	struct Trusted {};
	UnitaryMatrix(Matrix m, Trusted) : m_{std::move(m)} {}

	Matrix m_;
};

class HermitianMatrix
{
public:
	explicit HermitianMatrix(Matrix m, double tol = 1e-12);

	[[nodiscard]] std::ptrdiff_t dim() const { return m_.rows(); }
	[[nodiscard]] const Matrix& matrix() const { return m_; }

private:
	Matrix m_;
};

/// Hermitian, unit trace, positive semidefinite (eigenvalues >= -1e-10).
class DensityMatrix
{
public:
	explicit DensityMatrix(Matrix m, double tol = 1e-12);

	[[nodiscard]] std::ptrdiff_t dim() const { return m_.rows(); }
	[[nodiscard]] const Matrix& matrix() const { return m_; }
	[[nodiscard]] Complex operator()(std::ptrdiff_t r, std::ptrdiff_t c) const { return m_(r, c); }

private:
	Matrix m_;
};

} // namespace entpower
