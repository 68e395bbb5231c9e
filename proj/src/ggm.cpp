#include "entpower/ggm.hpp"

#include <algorithm>
#include <stdexcept>

namespace entpower::ggm
{

namespace
{

void combinations(int n, int k, int start, std::vector<int>& cur, std::vector<Bipartition>& out)
{
	if(static_cast<int>(cur.size()) == k)
	{
		out.push_back(Bipartition{cur});
		return;
	}
	for(int q = start; q <= n; ++q)
	{
		cur.push_back(q);
		combinations(n, k, q + 1, cur, out);
		cur.pop_back();
	}
}

} // namespace

std::vector<Bipartition> enumerate_bipartitions(int num_qubits)
{
	if(num_qubits < 2)
		throw DimensionError("bipartitions need at least two qubits");
	std::vector<Bipartition> out;
	std::vector<int> cur;
	for(int l = 1; 2 * l <= num_qubits; ++l)
	{
		std::vector<Bipartition> level;
		combinations(num_qubits, l, 1, cur, level);
		for(auto& b : level)
		{
			// A half-size cut and its complement are the same cut.
			if(2 * l == num_qubits && b.keep.front() != 1)
				continue;
			out.push_back(std::move(b));
		}
	}
	return out;
}

GgmEvaluator::GgmEvaluator(int num_qubits)
	: num_qubits_{num_qubits}, cuts_{enumerate_bipartitions(num_qubits)}
{
	layouts_.reserve(cuts_.size());
	for(const auto& c : cuts_)
		layouts_.push_back(kernels::make_cut_layout(num_qubits, c.keep));
}

GgmResult GgmEvaluator::evaluate(std::span<const Complex> amps, kernels::Exec exec) const
{
	if(amps.size() != (std::size_t{1} << num_qubits_))
		throw DimensionError("state size does not match evaluator");
	std::vector<double> eig(cuts_.size());
	if(exec == kernels::Exec::Parallel)
		kernels::max_reduced_eigenvalues_omp(amps, layouts_, eig);
	else
		kernels::max_reduced_eigenvalues_serial(amps, layouts_, eig);

	// Ties go to the lexicographically smallest cut.
	std::size_t best = 0;
	for(std::size_t k = 1; k < eig.size(); ++k)
	{
		if(eig[k] > eig[best] || (eig[k] == eig[best] && cuts_[k].keep < cuts_[best].keep))
			best = k;
	}
	const double emax = std::min(1.0, eig[best]);
	return GgmResult{std::max(0.0, 1.0 - emax), cuts_[best], emax};
}

double GgmEvaluator::value(std::span<const Complex> amps) const
{
	if(amps.size() != (std::size_t{1} << num_qubits_))
		throw DimensionError("state size does not match evaluator");
	double emax = 0.0;
	for(const auto& layout : layouts_)
	{
		emax = std::max(emax, kernels::max_reduced_eigenvalue(amps, layout, emax));
		if(emax >= 1.0)
			break;
	}
	return std::max(0.0, 1.0 - emax);
}

GgmResult ggm(const PureState& s, kernels::Exec exec)
{
	const GgmEvaluator ev(s.num_qubits());
	return ev.evaluate(std::span<const Complex>(s.amps().data(), static_cast<std::size_t>(s.dim())), exec);
}

} // namespace entpower::ggm
