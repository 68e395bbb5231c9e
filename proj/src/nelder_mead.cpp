#include "entpower/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace entpower::opt
{

namespace
{

class Counter
{
public:
	Counter(const Objective& f, const NelderMeadOptions& opts) : f_{f}, opts_{opts} {}

	double operator()(std::span<const double> x)
	{
		const double v = f_(x);
		++evals_;
		best_ = std::min(best_, std::isnan(v) ? best_ : v);
		history_.push_back(best_);
		return v;
	}

	[[nodiscard]] int evals() const { return evals_; }
	[[nodiscard]] bool exhausted() const { return evals_ >= opts_.max_evals; }

	// Best value has not moved by more than ftol in the last stall_window evals.
	[[nodiscard]] bool stalled() const
	{
		const auto w = static_cast<std::size_t>(opts_.stall_window);
		if(history_.size() <= w)
			return false;
		return history_[history_.size() - 1 - w] - history_.back() <= opts_.ftol;
	}

private:
	const Objective& f_;
	const NelderMeadOptions& opts_;
	int evals_ = 0;
	double best_ = INFINITY;
	std::vector<double> history_;
};

struct Simplex
{
	std::vector<std::vector<double>> x;
	std::vector<double> f;

	void sort()
	{
		std::vector<std::size_t> order(f.size());
		std::iota(order.begin(), order.end(), 0);
		std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return f[a] < f[b]; });
		std::vector<std::vector<double>> xs;
		std::vector<double> fs;
		for(auto k : order)
		{
			xs.push_back(std::move(x[k]));
			fs.push_back(f[k]);
		}
		x = std::move(xs);
		f = std::move(fs);
	}

	[[nodiscard]] double diameter() const
	{
		double d = 0.0;
		for(std::size_t k = 1; k < x.size(); ++k)
			for(std::size_t i = 0; i < x[0].size(); ++i)
				d = std::max(d, std::abs(x[k][i] - x[0][i]));
		return d;
	}
};

Simplex build(Counter& f, const std::vector<double>& center, double step)
{
	Simplex s;
	s.x.push_back(center);
	s.f.push_back(f(center));
	for(std::size_t i = 0; i < center.size(); ++i)
	{
		auto v = center;
		v[i] += step;
		s.f.push_back(f(v));
		s.x.push_back(std::move(v));
	}
	s.sort();
	return s;
}

} // namespace

NelderMeadResult nelder_mead(const Objective& objective, std::vector<double> x0, const NelderMeadOptions& opts)
{
	if(x0.empty())
		throw std::invalid_argument("nelder_mead: empty start point");
	if(opts.max_evals < 1 || !(opts.ftol > 0.0) || !(opts.xtol > 0.0))
		throw std::invalid_argument("nelder_mead: bad options");

	const std::size_t n = x0.size();
	const double dn = static_cast<double>(n);
	const double alpha = 1.0;
	const double beta = 1.0 + 2.0 / dn;
	const double gamma = 0.75 - 1.0 / (2.0 * dn);
	const double delta = 1.0 - 1.0 / dn;

	Counter f(objective, opts);
	Simplex s = build(f, x0, opts.initial_step);
	int resets = 0;
	double value_at_reset = s.f[0];
	bool converged = false;

	std::vector<double> centroid(n), xr(n), xe(n), xc(n);
	while(!f.exhausted())
	{
		if(s.diameter() < opts.xtol && f.stalled())
		{
			// Rebuild once more around the best vertex; stop if that no longer
			// improves the value.
			if(resets >= opts.max_resets || (resets > 0 && value_at_reset - s.f[0] <= opts.ftol))
			{
				converged = true;
				break;
			}
			++resets;
			value_at_reset = s.f[0];
			const auto best = s.x[0];
			s = build(f, best, 0.1 * opts.initial_step);
			continue;
		}

		std::fill(centroid.begin(), centroid.end(), 0.0);
		for(std::size_t k = 0; k < n; ++k)
			for(std::size_t i = 0; i < n; ++i)
				centroid[i] += s.x[k][i] / dn;

		const auto& worst = s.x[n];
		for(std::size_t i = 0; i < n; ++i)
			xr[i] = centroid[i] + alpha * (centroid[i] - worst[i]);
		const double fr = f(xr);

		bool shrink = false;
		if(fr < s.f[0])
		{
			for(std::size_t i = 0; i < n; ++i)
				xe[i] = centroid[i] + beta * (xr[i] - centroid[i]);
			const double fe = f(xe);
			if(fe < fr)
			{
				s.x[n] = xe;
				s.f[n] = fe;
			}
			else
			{
				s.x[n] = xr;
				s.f[n] = fr;
			}
		}
		else if(fr < s.f[n - 1])
		{
			s.x[n] = xr;
			s.f[n] = fr;
		}
		else if(fr < s.f[n])
		{
			// outside contraction
			for(std::size_t i = 0; i < n; ++i)
				xc[i] = centroid[i] + gamma * (xr[i] - centroid[i]);
			const double fc = f(xc);
			if(fc <= fr)
			{
				s.x[n] = xc;
				s.f[n] = fc;
			}
			else
				shrink = true;
		}
		else
		{
			// inside contraction
			for(std::size_t i = 0; i < n; ++i)
				xc[i] = centroid[i] - gamma * (centroid[i] - worst[i]);
			const double fc = f(xc);
			if(fc < s.f[n])
			{
				s.x[n] = xc;
				s.f[n] = fc;
			}
			else
				shrink = true;
		}

		if(shrink)
		{
			for(std::size_t k = 1; k <= n && !f.exhausted(); ++k)
			{
				for(std::size_t i = 0; i < n; ++i)
					s.x[k][i] = s.x[0][i] + delta * (s.x[k][i] - s.x[0][i]);
				s.f[k] = f(s.x[k]);
			}
		}
		s.sort();
	}

	return NelderMeadResult{s.x[0], s.f[0], f.evals(), converged};
}

} // namespace entpower::opt
