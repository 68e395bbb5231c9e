// Serial reference vs OpenMP kernels. On a single core the OpenMP versions
// only show their overhead; run with OMP_NUM_THREADS > 1 to see the speedup.

#include <benchmark/benchmark.h>

#include "entpower/ggm.hpp"
#include "entpower/kernels.hpp"
#include "entpower/random.hpp"
#include "entpower/zoo.hpp"

using namespace entpower;

namespace
{

Vector random_amps(int n)
{
	Rng rng(static_cast<std::uint64_t>(n));
	Vector v(std::ptrdiff_t{1} << n);
	for(auto& a : v)
		a = Complex{rng.normal(), rng.normal()};
	return v.normalized();
}

std::vector<kernels::CutLayout> layouts(int n)
{
	std::vector<kernels::CutLayout> out;
	for(const auto& c : ggm::enumerate_bipartitions(n))
		out.push_back(kernels::make_cut_layout(n, c.keep));
	return out;
}

template <bool Parallel>
void BM_MaxReducedEigenvalues(benchmark::State& state)
{
	const int n = static_cast<int>(state.range(0));
	const Vector v = random_amps(n);
	const auto cuts = layouts(n);
	std::vector<double> out(cuts.size());
	std::span<const Complex> amps(v.data(), static_cast<std::size_t>(v.size()));
	for(auto _ : state)
	{
		if constexpr(Parallel)
			kernels::max_reduced_eigenvalues_omp(amps, cuts, out);
		else
			kernels::max_reduced_eigenvalues_serial(amps, cuts, out);
		benchmark::DoNotOptimize(out.data());
	}
	state.counters["cuts"] = static_cast<double>(cuts.size());
}

template <bool Parallel>
void BM_Matvec(benchmark::State& state)
{
	const int n = static_cast<int>(state.range(0));
	const Matrix u = zoo::haar_random(std::ptrdiff_t{1} << n, 1).matrix();
	const Vector v = random_amps(n);
	std::vector<Complex> y(static_cast<std::size_t>(v.size()));
	std::span<const Complex> x(v.data(), static_cast<std::size_t>(v.size()));
	for(auto _ : state)
	{
		if constexpr(Parallel)
			kernels::matvec_omp(u, x, y);
		else
			kernels::matvec_serial(u, x, y);
		benchmark::DoNotOptimize(y.data());
	}
}

} // namespace

BENCHMARK(BM_MaxReducedEigenvalues<false>)->Name("max_eigs/serial")->DenseRange(6, 12, 2);
BENCHMARK(BM_MaxReducedEigenvalues<true>)->Name("max_eigs/omp")->DenseRange(6, 12, 2);
BENCHMARK(BM_Matvec<false>)->Name("matvec/serial")->DenseRange(6, 11, 1);
BENCHMARK(BM_Matvec<true>)->Name("matvec/omp")->DenseRange(6, 11, 1);

BENCHMARK_MAIN();
