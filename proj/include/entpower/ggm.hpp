#pragma once

#include <span>
#include <vector>

#include "entpower/kernels.hpp"
#include "entpower/types.hpp"

namespace entpower::ggm
{

/// Kept side of a cut: sorted 1-based sites, 1 <= size <= N/2. Half-size
/// cuts always contain site 1.
struct Bipartition
{
	std::vector<int> keep;

	friend bool operator==(const Bipartition&, const Bipartition&) = default;
	friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

struct GgmResult
{
	double value = 0.0;
	Bipartition argmax_cut;
	double max_eigenvalue = 1.0;
};

/// All inequivalent cuts of an N-qubit register, ordered by size and then
/// lexicographically.
std::vector<Bipartition> enumerate_bipartitions(int num_qubits);

/// Precomputed gather layouts for every cut of an N-qubit register. Reuse one
/// evaluator across many states of the same size.
class GgmEvaluator
{
public:
	explicit GgmEvaluator(int num_qubits);

	[[nodiscard]] int num_qubits() const { return num_qubits_; }
	[[nodiscard]] std::size_t num_cuts() const { return cuts_.size(); }
	[[nodiscard]] std::span<const kernels::CutLayout> layouts() const { return layouts_; }

	/// Full result with the argmax cut.
	[[nodiscard]] GgmResult evaluate(std::span<const Complex> amps,
	                                 kernels::Exec exec = kernels::Exec::Serial) const;

	/// Only the GGM value; the optimizer's objective.
	[[nodiscard]] double value(std::span<const Complex> amps) const;

private:
	int num_qubits_;
	std::vector<Bipartition> cuts_;
	std::vector<kernels::CutLayout> layouts_;
};

GgmResult ggm(const PureState& s, kernels::Exec exec = kernels::Exec::Parallel);

} // namespace entpower::ggm
