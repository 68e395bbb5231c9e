#include "entpower/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "entpower/ggm.hpp"
#include "entpower/kernels.hpp"
#include "entpower/nelder_mead.hpp"
#include "entpower/random.hpp"
#include "entpower/tensor.hpp"

namespace entpower::opt
{

using nlohmann::json;

PureState to_state(const FSPoint& p)
{
	if(p.thetas.size() != p.xis.size() || p.thetas.empty())
		throw std::invalid_argument("FSPoint: thetas and xis must have equal nonzero length");
	std::vector<Vector> factors;
	for(std::size_t q = 0; q < p.thetas.size(); ++q)
	{
		Vector v(2);
		v << std::cos(0.5 * p.thetas[q]), std::polar(std::sin(0.5 * p.thetas[q]), p.xis[q]);
		factors.push_back(std::move(v));
	}
	return tensor::product_state(factors);
}

FSPoint canonicalize(FSPoint p)
{
	const double two_pi = 2.0 * kPi;
	for(std::size_t q = 0; q < p.thetas.size(); ++q)
	{
		double th = std::fmod(p.thetas[q], two_pi);
		if(th < 0.0)
			th += two_pi;
		double xi = p.xis[q];
		if(th > kPi)
		{
			// cos((2pi - th)/2) = -cos(th/2): flip the |0> sign, absorbed as xi + pi
			// up to a global phase of -1.
			th = two_pi - th;
			xi += kPi;
		}
		xi = std::fmod(xi, two_pi);
		if(xi < 0.0)
			xi += two_pi;
		if(xi >= two_pi)
			xi = 0.0;
		p.thetas[q] = th;
		p.xis[q] = xi;
	}
	return p;
}

std::string to_string(Ansatz a)
{
	switch(a)
	{
	case Ansatz::Full: return "full";
	case Ansatz::NoPhases: return "no-phases";
	case Ansatz::Symmetric: return "symmetric";
	case Ansatz::OddEven: return "odd-even";
	case Ansatz::EdgeBulk: return "edge-bulk";
	}
	return "unknown";
}

Ansatz ansatz_from_string(const std::string& s)
{
	for(Ansatz a : {Ansatz::Full, Ansatz::NoPhases, Ansatz::Symmetric, Ansatz::OddEven, Ansatz::EdgeBulk})
		if(to_string(a) == s)
			return a;
	throw std::invalid_argument("unknown ansatz '" + s + "'");
}

std::size_t parameter_count(Ansatz a, int n)
{
	switch(a)
	{
	case Ansatz::Full: return static_cast<std::size_t>(2 * n);
	case Ansatz::NoPhases: return static_cast<std::size_t>(n);
	case Ansatz::Symmetric: return 1;
	case Ansatz::OddEven: return 2;
	case Ansatz::EdgeBulk: return static_cast<std::size_t>(std::max(1, n - 1));
	}
	return 0;
}

namespace
{

bool is_full_space(Ansatz a) { return a == Ansatz::Full || a == Ansatz::NoPhases; }

// Reflect into [0, pi]. Without this a phase-free ansatz could reach
// sin(theta/2) < 0, which is xi = pi in disguise.
double fold(double theta)
{
	const double y = std::fmod(std::abs(theta), 2.0 * kPi);
	return y > kPi ? 2.0 * kPi - y : y;
}

void expand_into(Ansatz a, std::span<const double> x, int n, std::span<double> th, std::span<double> xi)
{
	std::fill(xi.begin(), xi.end(), 0.0);
	switch(a)
	{
	case Ansatz::Full:
		for(int q = 0; q < n; ++q)
		{
			th[q] = x[q];
			xi[q] = x[n + q];
		}
		break;
	case Ansatz::NoPhases:
		for(int q = 0; q < n; ++q)
			th[q] = fold(x[q]);
		break;
	case Ansatz::Symmetric:
		std::fill(th.begin(), th.end(), fold(x[0]));
		break;
	case Ansatz::OddEven:
		for(int q = 0; q < n; ++q)
			th[q] = fold((q % 2 == 0) ? x[0] : x[1]); // site q+1 odd <=> q even
		break;
	case Ansatz::EdgeBulk:
		th[0] = fold(x[0]);
		th[n - 1] = th[0];
		for(int q = 1; q < n - 1; ++q)
			th[q] = fold(x[q]);
		break;
	}
}

// Parameters of a full-space ansatz representing point p.
std::vector<double> full_params(Ansatz a, const FSPoint& p)
{
	std::vector<double> x(p.thetas);
	if(a == Ansatz::Full)
		x.insert(x.end(), p.xis.begin(), p.xis.end());
	return x;
}

// Product state -> U -> GGM with reusable buffers. One instance per thread.
class FsObjective
{
public:
	FsObjective(const UnitaryMatrix& u, const ggm::GgmEvaluator& ev)
		: u_{u.matrix()}, ev_{ev}, n_{u.num_qubits()}, diagonal_{u.is_diagonal()},
		  zero_(static_cast<std::size_t>(n_)), one_(static_cast<std::size_t>(n_)),
		  th_(static_cast<std::size_t>(n_)), xi_(static_cast<std::size_t>(n_)),
		  in_(static_cast<std::size_t>(u.dim())), out_(static_cast<std::size_t>(u.dim()))
	{
		if(diagonal_)
			diag_ = u_.diagonal();
	}

	double ggm_of(std::span<const double> thetas, std::span<const double> xis)
	{
		for(int q = 0; q < n_; ++q)
		{
			zero_[q] = std::cos(0.5 * thetas[q]);
			one_[q] = std::polar(std::sin(0.5 * thetas[q]), xis[q]);
		}
		kernels::product_amplitudes(zero_, one_, in_);
		if(diagonal_)
		{
			for(std::size_t k = 0; k < in_.size(); ++k)
				out_[k] = diag_[static_cast<Eigen::Index>(k)] * in_[k];
		}
		else
			kernels::matvec_serial(u_, in_, out_);
		return ev_.value(out_);
	}

	double ggm_of(Ansatz a, std::span<const double> x)
	{
		expand_into(a, x, n_, th_, xi_);
		return ggm_of(th_, xi_);
	}

	[[nodiscard]] int num_qubits() const { return n_; }

private:
	const Matrix& u_;
	const ggm::GgmEvaluator& ev_;
	int n_;
	bool diagonal_;
	Vector diag_;
	std::vector<Complex> zero_, one_;
	std::vector<double> th_, xi_;
	std::vector<Complex> in_, out_;
};

struct RunOutcome
{
	double value = -1.0;
	FSPoint point;
	Ansatz ansatz = Ansatz::Full;
	long long evals = 0;
	bool converged = false;
};

std::vector<double> random_start(Ansatz a, int n, Rng& rng)
{
	std::vector<double> x(parameter_count(a, n));
	for(std::size_t i = 0; i < x.size(); ++i)
	{
		const bool is_phase = a == Ansatz::Full && i >= static_cast<std::size_t>(n);
		x[i] = is_phase ? rng.uniform(0.0, 2.0 * kPi) : rng.uniform(0.0, kPi);
	}
	return x;
}

RunOutcome local_run(FsObjective& obj, Ansatz a, std::vector<double> x0, const OptimizerConfig& cfg, double step)
{
	NelderMeadOptions o;
	o.max_evals = cfg.max_evals;
	o.ftol = cfg.ftol;
	o.xtol = cfg.xtol;
	o.initial_step = step;
	const auto r = nelder_mead([&](std::span<const double> x) { return -obj.ggm_of(a, x); }, std::move(x0), o);

	const int n = obj.num_qubits();
	std::vector<double> th(static_cast<std::size_t>(n)), xi(static_cast<std::size_t>(n));
	expand_into(a, r.x, n, th, xi);
	RunOutcome out;
	out.point = canonicalize(FSPoint{th, xi});
	out.value = -r.fval;
	out.ansatz = a;
	out.evals = r.evals;
	out.converged = r.converged;
	return out;
}

void keep_better(RunOutcome& best, RunOutcome cand)
{
	const long long evals = best.evals + cand.evals;
	if(cand.value > best.value)
		best = std::move(cand);
	best.evals = evals;
}

std::vector<Ansatz> default_ansatze(const UnitaryMatrix& u)
{
	return {Ansatz::Symmetric, Ansatz::OddEven, Ansatz::EdgeBulk, u.is_diagonal() ? Ansatz::NoPhases : Ansatz::Full};
}

// Everything restart k does depends only on (cfg.seed, k), so adding
// restarts can only improve the best value.
RunOutcome restart(FsObjective& obj, const std::vector<Ansatz>& reduced, std::optional<Ansatz> full,
                   const OptimizerConfig& cfg, int k)
{
	const int n = obj.num_qubits();
	Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(k)));
	RunOutcome best;
	if(!reduced.empty())
	{
		const Ansatz a = reduced[static_cast<std::size_t>(k) % reduced.size()];
		RunOutcome r = local_run(obj, a, random_start(a, n, rng), cfg, 0.5);
		if(full)
		{
			RunOutcome polished = local_run(obj, *full, full_params(*full, r.point), cfg, 0.2);
			keep_better(r, std::move(polished));
		}
		keep_better(best, std::move(r));
	}
	if(full)
		keep_better(best, local_run(obj, *full, random_start(*full, n, rng), cfg, 0.5));
	return best;
}

} // namespace

FSPoint expand(Ansatz a, std::span<const double> params, int num_qubits)
{
	if(params.size() != parameter_count(a, num_qubits))
		throw std::invalid_argument("expand: wrong parameter count for ansatz");
	FSPoint p{std::vector<double>(static_cast<std::size_t>(num_qubits)),
	          std::vector<double>(static_cast<std::size_t>(num_qubits))};
	expand_into(a, params, num_qubits, p.thetas, p.xis);
	return p;
}

void OptimizerConfig::validate() const
{
	if(restarts < 1)
		throw std::invalid_argument("OptimizerConfig: restarts must be >= 1");
	if(max_evals < 1)
		throw std::invalid_argument("OptimizerConfig: max_evals must be >= 1");
	if(!(ftol > 0.0) || !(xtol > 0.0))
		throw std::invalid_argument("OptimizerConfig: tolerances must be positive");
}

json to_json(const OptimizerConfig& c)
{
	json a = json::array();
	for(auto x : c.ansatze)
		a.push_back(to_string(x));
	return {{"restarts", c.restarts}, {"max_evals", c.max_evals}, {"ftol", c.ftol},
	        {"xtol", c.xtol},         {"seed", c.seed},           {"ansatze", a}};
}

OptimizerConfig optimizer_config_from_json(const json& j)
{
	OptimizerConfig c;
	c.restarts = j.value("restarts", c.restarts);
	c.max_evals = j.value("max_evals", c.max_evals);
	c.ftol = j.value("ftol", c.ftol);
	c.xtol = j.value("xtol", c.xtol);
	c.seed = j.value("seed", c.seed);
	if(j.contains("ansatze"))
		for(const auto& a : j.at("ansatze"))
			c.ansatze.push_back(ansatz_from_string(a.get<std::string>()));
	c.validate();
	return c;
}

json to_json(const PowerResult& r)
{
	return {{"value", r.value},
	        {"argmax", {{"thetas", r.argmax.thetas}, {"xis", r.argmax.xis}}},
	        {"ansatz", to_string(r.ansatz_used)},
	        {"evaluations", r.evaluations},
	        {"restarts", r.restarts},
	        {"converged", r.converged}};
}

double ggm_at(const UnitaryMatrix& u, const FSPoint& p)
{
	if(p.num_qubits() != u.num_qubits())
		throw DimensionError("FSPoint size does not match the unitary");
	const ggm::GgmEvaluator ev(u.num_qubits());
	FsObjective obj(u, ev);
	return obj.ggm_of(p.thetas, p.xis);
}

PowerResult entangling_power(const UnitaryMatrix& u, const OptimizerConfig& cfg)
{
	cfg.validate();
	const int n = u.num_qubits();
	if(n < 2)
		throw DimensionError("entangling power needs at least two qubits");

	const std::vector<Ansatz> ansatze = cfg.ansatze.empty() ? default_ansatze(u) : cfg.ansatze;
	std::vector<Ansatz> reduced;
	std::optional<Ansatz> full;
	for(Ansatz a : ansatze)
	{
		if(is_full_space(a))
			full = (full == Ansatz::Full) ? Ansatz::Full : a;
		else if(std::find(reduced.begin(), reduced.end(), a) == reduced.end())
			reduced.push_back(a);
	}

	const ggm::GgmEvaluator ev(n);
	std::vector<RunOutcome> outcomes(static_cast<std::size_t>(cfg.restarts));
#pragma omp parallel
	{
		FsObjective obj(u, ev);
#pragma omp for schedule(dynamic)
		for(int k = 0; k < cfg.restarts; ++k)
			outcomes[static_cast<std::size_t>(k)] = restart(obj, reduced, full, cfg, k);
	}

	// Serial reduction in restart order keeps the result thread-count independent.
	PowerResult res;
	std::size_t best = 0;
	for(std::size_t k = 0; k < outcomes.size(); ++k)
	{
		res.evaluations += outcomes[k].evals;
		if(outcomes[k].value > outcomes[best].value)
			best = k;
	}
	res.argmax = outcomes[best].point;
	res.ansatz_used = outcomes[best].ansatz;
	res.converged = outcomes[best].converged;
	res.restarts = cfg.restarts;
	FsObjective check(u, ev);
	res.value = check.ggm_of(res.argmax.thetas, res.argmax.xis);
	return res;
}

PowerResult disentangling_power(const UnitaryMatrix& u, const OptimizerConfig& cfg)
{
	return entangling_power(u.adjoint(), cfg);
}

double power_gap(const UnitaryMatrix& u, const OptimizerConfig& cfg)
{
	return std::abs(entangling_power(u, cfg).value - disentangling_power(u, cfg).value);
}

double brute_force_power(const UnitaryMatrix& u, int grid, bool include_phases)
{
	const int n = u.num_qubits();
	if(grid < 2)
		throw std::invalid_argument("brute_force_power: grid must be >= 2");
	const int params = include_phases ? 2 * n : n;
	const double total_d = std::pow(static_cast<double>(grid), params);
	if(total_d > 1e8)
		throw std::invalid_argument("brute_force_power: grid has more than 1e8 points");
	const auto total = static_cast<long long>(std::llround(total_d));

	std::vector<double> theta_nodes(static_cast<std::size_t>(grid)), xi_nodes(static_cast<std::size_t>(grid));
	for(int k = 0; k < grid; ++k)
	{
		theta_nodes[static_cast<std::size_t>(k)] = kPi * k / (grid - 1);
		xi_nodes[static_cast<std::size_t>(k)] = 2.0 * kPi * k / grid;
	}

	const ggm::GgmEvaluator ev(n);
	double best = 0.0;
#pragma omp parallel reduction(max : best)
	{
		FsObjective obj(u, ev);
		std::vector<double> th(static_cast<std::size_t>(n)), xi(static_cast<std::size_t>(n), 0.0);
#pragma omp for schedule(static)
		for(long long flat = 0; flat < total; ++flat)
		{
			long long rest = flat;
			for(int q = 0; q < n; ++q)
			{
				th[static_cast<std::size_t>(q)] = theta_nodes[static_cast<std::size_t>(rest % grid)];
				rest /= grid;
			}
			if(include_phases)
				for(int q = 0; q < n; ++q)
				{
					xi[static_cast<std::size_t>(q)] = xi_nodes[static_cast<std::size_t>(rest % grid)];
					rest /= grid;
				}
			best = std::max(best, obj.ggm_of(th, xi));
		}
	}
	return best;
}

} // namespace entpower::opt
