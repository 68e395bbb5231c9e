#include "entpower/kernels.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <omp.h>

namespace entpower::kernels
{

CutLayout make_cut_layout(int num_qubits, std::span<const int> keep)
{
	CutLayout cut;
	cut.keep.assign(keep.begin(), keep.end());
	std::sort(cut.keep.begin(), cut.keep.end());

	std::vector<int> traced;
	for(int q = 1; q <= num_qubits; ++q)
		if(!std::binary_search(cut.keep.begin(), cut.keep.end(), q))
			traced.push_back(q);

	cut.rows = std::ptrdiff_t{1} << cut.keep.size();
	cut.cols = std::ptrdiff_t{1} << traced.size();
	cut.index.resize(static_cast<std::size_t>(cut.rows * cut.cols));

	const std::ptrdiff_t dim = std::ptrdiff_t{1} << num_qubits;
	for(std::ptrdiff_t idx = 0; idx < dim; ++idx)
	{
		std::ptrdiff_t r = 0;
		for(int q : cut.keep)
			r = (r << 1) | ((idx >> (num_qubits - q)) & 1);
		std::ptrdiff_t c = 0;
		for(int q : traced)
			c = (c << 1) | ((idx >> (num_qubits - q)) & 1);
		cut.index[static_cast<std::size_t>(r * cut.cols + c)] = idx;
	}
	return cut;
}

namespace
{

// Largest eigenvalue of a reduced state, or, when the cheap bound
//   lambda_max <= t/n + sqrt((n-1)/n * (tr rho^2 - t^2/n))
// already falls below `floor`, that bound instead. Either way the max over
// cuts is unchanged.
template <int Rows>
double max_eig_fixed(std::span<const Complex> amps, const CutLayout& cut, double floor)
{
	using Mat = Eigen::Matrix<Complex, Rows, Rows>;
	const std::ptrdiff_t cols = cut.cols;
	const std::ptrdiff_t* idx = cut.index.data();
	Mat rho = Mat::Zero();
	for(std::ptrdiff_t c = 0; c < cols; ++c)
	{
		Eigen::Matrix<Complex, Rows, 1> v;
		for(int r = 0; r < Rows; ++r)
			v[r] = amps[static_cast<std::size_t>(idx[r * cols + c])];
		rho.template selfadjointView<Eigen::Lower>().rankUpdate(v);
	}
	if(floor > 0.0)
	{
		double t = 0.0, purity = 0.0;
		for(int r = 0; r < Rows; ++r)
		{
			t += rho(r, r).real();
			purity += rho(r, r).real() * rho(r, r).real();
			for(int s = 0; s < r; ++s)
				purity += 2.0 * std::norm(rho(r, s));
		}
		const double bound = t / Rows + std::sqrt(std::max(0.0, (Rows - 1.0) / Rows * (purity - t * t / Rows)));
		if(bound + 1e-12 < floor)
			return bound;
	}
	Eigen::SelfAdjointEigenSolver<Mat> es;
	es.compute(rho, Eigen::EigenvaluesOnly); // reads the lower triangle
	return es.eigenvalues()[Rows - 1];
}

double max_eig_dynamic(std::span<const Complex> amps, const CutLayout& cut)
{
	Matrix m(cut.rows, cut.cols);
	for(std::ptrdiff_t r = 0; r < cut.rows; ++r)
		for(std::ptrdiff_t c = 0; c < cut.cols; ++c)
			m(r, c) = amps[static_cast<std::size_t>(cut.index[static_cast<std::size_t>(r * cut.cols + c)])];
	Matrix rho = m * m.adjoint();
	Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
	return es.eigenvalues()[cut.rows - 1];
}

} // namespace

double max_reduced_eigenvalue(std::span<const Complex> amps, const CutLayout& cut, double floor)
{
	switch(cut.rows)
	{
	case 2:
	{
		// 2x2 closed form: lambda_max = (a+c)/2 + sqrt(((a-c)/2)^2 + |b|^2)
		double a = 0.0, c = 0.0;
		Complex b{};
		const std::ptrdiff_t n = cut.cols;
		const std::ptrdiff_t* idx = cut.index.data();
		for(std::ptrdiff_t k = 0; k < n; ++k)
		{
			const Complex u = amps[static_cast<std::size_t>(idx[k])];
			const Complex v = amps[static_cast<std::size_t>(idx[n + k])];
			a += std::norm(u);
			c += std::norm(v);
			b += u * std::conj(v);
		}
		const double h = 0.5 * (a - c);
		return 0.5 * (a + c) + std::sqrt(h * h + std::norm(b));
	}
	case 4:
		return max_eig_fixed<4>(amps, cut, floor);
	case 8:
		return max_eig_fixed<8>(amps, cut, floor);
	default:
		return max_eig_dynamic(amps, cut);
	}
}

void max_reduced_eigenvalues_serial(std::span<const Complex> amps, std::span<const CutLayout> cuts,
                                    std::span<double> out)
{
	for(std::size_t k = 0; k < cuts.size(); ++k)
		out[k] = max_reduced_eigenvalue(amps, cuts[k]);
}

void max_reduced_eigenvalues_omp(std::span<const Complex> amps, std::span<const CutLayout> cuts,
                                 std::span<double> out)
{
	const auto n = static_cast<std::ptrdiff_t>(cuts.size());
#pragma omp parallel for schedule(dynamic)
	for(std::ptrdiff_t k = 0; k < n; ++k)
		out[static_cast<std::size_t>(k)] = max_reduced_eigenvalue(amps, cuts[static_cast<std::size_t>(k)]);
}

void matvec_serial(const Matrix& u, std::span<const Complex> x, std::span<Complex> y)
{
	Eigen::Map<const Vector> xv(x.data(), static_cast<Eigen::Index>(x.size()));
	Eigen::Map<Vector> yv(y.data(), static_cast<Eigen::Index>(y.size()));
	yv.noalias() = u * xv;
}

void matvec_omp(const Matrix& u, std::span<const Complex> x, std::span<Complex> y)
{
	Eigen::Map<const Vector> xv(x.data(), static_cast<Eigen::Index>(x.size()));
	Eigen::Map<Vector> yv(y.data(), static_cast<Eigen::Index>(y.size()));
	const Eigen::Index rows = u.rows();
	// Each thread takes one contiguous row block so Eigen's gemv stays vectorized.
#pragma omp parallel
	{
		const Eigen::Index t = omp_get_thread_num();
		const Eigen::Index nt = omp_get_num_threads();
		const Eigen::Index r0 = rows * t / nt;
		const Eigen::Index r1 = rows * (t + 1) / nt;
		if(r1 > r0)
			yv.segment(r0, r1 - r0).noalias() = u.middleRows(r0, r1 - r0) * xv;
	}
}

void product_amplitudes(std::span<const Complex> zero_amp, std::span<const Complex> one_amp,
                        std::span<Complex> out)
{
	const std::size_t n = zero_amp.size();
	out[0] = 1.0;
	std::size_t size = 1;
	for(std::size_t q = 0; q < n; ++q)
	{
		for(std::size_t k = size; k-- > 0;)
		{
			const Complex v = out[k];
			out[2 * k + 1] = v * one_amp[q];
			out[2 * k] = v * zero_amp[q];
		}
		size *= 2;
	}
}

} // namespace entpower::kernels
