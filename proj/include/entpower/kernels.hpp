#pragma once

// Hot inner loops of the optimizer. Each kernel comes as a serial reference
// and an OpenMP version; both must agree to rounding (see tests/test_kernels).

#include <span>
#include <vector>

#include "entpower/types.hpp"

namespace entpower::kernels
{

enum class Exec
{
	Serial,
	Parallel
};

/// Gather map that reshapes an N-qubit amplitude vector into the
/// 2^|keep| x 2^(N-|keep|) matrix whose Gram matrix is the reduced state on
/// `keep`. Entry (r, c) lives at amps[index[r * cols + c]].
struct CutLayout
{
	std::vector<int> keep; // 1-based, increasing
	std::ptrdiff_t rows = 0;
	std::ptrdiff_t cols = 0;
	std::vector<std::ptrdiff_t> index;
};

CutLayout make_cut_layout(int num_qubits, std::span<const int> keep);

/// Largest eigenvalue of the reduced density matrix described by `cut`.
/// With `floor` > 0 the result may instead be any upper bound below `floor`
/// (the exact value is skipped when a cheap bound proves it cannot win).
double max_reduced_eigenvalue(std::span<const Complex> amps, const CutLayout& cut, double floor = 0.0);

/// Largest reduced eigenvalue for every cut, written to `out` (same order as
/// `cuts`).
void max_reduced_eigenvalues_serial(std::span<const Complex> amps, std::span<const CutLayout> cuts,
                                    std::span<double> out);
void max_reduced_eigenvalues_omp(std::span<const Complex> amps, std::span<const CutLayout> cuts,
                                 std::span<double> out);

/// y = U x for dense U.
void matvec_serial(const Matrix& u, std::span<const Complex> x, std::span<Complex> y);
void matvec_omp(const Matrix& u, std::span<const Complex> x, std::span<Complex> y);

/// Amplitudes of the product state with per-qubit amplitudes (c_q, s_q):
/// qubit q contributes c_q for bit 0 and s_q for bit 1.
void product_amplitudes(std::span<const Complex> zero_amp, std::span<const Complex> one_amp,
                        std::span<Complex> out);

} // namespace entpower::kernels
