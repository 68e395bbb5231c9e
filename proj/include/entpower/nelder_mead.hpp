#pragma once

#include <functional>
#include <span>
#include <vector>

namespace entpower::opt
{

struct NelderMeadOptions
{
	int max_evals = 5000;
	double ftol = 1e-9;
	double xtol = 1e-8;
	double initial_step = 0.5;
	/// Window (in evaluations) over which the best value must be stable.
	int stall_window = 50;
	/// Times the simplex is rebuilt around the best vertex after converging.
	int max_resets = 2;
};

struct NelderMeadResult
{
	std::vector<double> x;
	double fval = 0.0;
	int evals = 0;
	bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Minimizes `f` from `x0` with the adaptive-coefficient Nelder-Mead simplex
/// (Gao and Han 2012). Converged means the simplex diameter fell below xtol
/// and the best value moved by at most ftol over the last `stall_window`
/// evaluations.
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> x0, const NelderMeadOptions& opts = {});

} // namespace entpower::opt
