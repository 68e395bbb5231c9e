#include "entpower/experiments.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <ctime>
#include <exception>
#include <ostream>

#include <omp.h>
#include <sys/utsname.h>
#include <unistd.h>

#include "entpower/random.hpp"
#include "entpower/types.hpp"

namespace entpower::exp
{

using nlohmann::json;

namespace
{

std::string fmt_double(double v)
{
	char buf[40];
	std::snprintf(buf, sizeof buf, "%.17g", v);
	return buf;
}

opt::OptimizerConfig optimizer_of(const json& config)
{
	if(config.contains("optimizer"))
		return opt::optimizer_config_from_json(config.at("optimizer"));
	return {};
}

template <class T>
T get(const json& j, const char* key)
{
	if(!j.contains(key))
		throw SpecParseError(std::string("config: missing field '") + key + "'");
	try
	{
		return j.at(key).get<T>();
	}
	catch(const json::exception& e)
	{
		throw SpecParseError(std::string("config: bad field '") + key + "': " + e.what());
	}
}

// Explicit "values" list, or the default grid of `points` nodes.
std::vector<double> values_or_grid(const json& config, std::vector<double> (*grid)(int), int default_points)
{
	if(config.contains("values"))
		return get<std::vector<double>>(config, "values");
	return grid(config.value("grid", default_points));
}

std::vector<SweepPoint> plan_scan_lambda(const json& c, std::uint64_t opt_seed)
{
	const auto kind = get<std::string>(c, "kind");
	const int n = get<int>(c, "n");
	check_cap(n, c);
	std::vector<SweepPoint> pts;
	if(kind == "nd-even")
	{
		if(n % 2 != 0 || n < 4)
			throw std::invalid_argument("scan-lambda: nd-even needs even n >= 4");
		for(double l : values_or_grid(c, lambda_grid, 97))
			pts.push_back({spec::NonDiagEven{n, l}, "lambda", l, opt_seed});
	}
	else if(kind == "nd-odd")
	{
		if(n % 2 == 0 || n < 3)
			throw std::invalid_argument("scan-lambda: nd-odd needs odd n >= 3");
		json inner_json = {{"kind", "nd-odd"}, {"n", n}, {"lambda", 0.0}};
		for(const char* key : {"inner", "seed", "omega"})
			if(c.contains(key))
				inner_json[key] = c.at(key);
		const auto base = std::get<spec::NonDiagOdd>(unitary_spec_from_json(inner_json));
		const std::uint64_t row_seed = base.inner.kind == zoo::OddInner::Kind::Haar ? base.inner.seed : opt_seed;
		for(double l : values_or_grid(c, lambda_grid, 97))
			pts.push_back({spec::NonDiagOdd{n, l, base.inner}, "lambda", l, row_seed});
	}
	else
		throw std::invalid_argument("scan-lambda: kind must be nd-even or nd-odd");
	return pts;
}

std::vector<SweepPoint> plan_scan_time(const json& c, std::uint64_t opt_seed)
{
	const auto kind = get<std::string>(c, "kind");
	const int n = get<int>(c, "n");
	check_cap(n, c);
	std::vector<SweepPoint> pts;
	if(kind == "dm")
	{
		if(n % 2 != 0 || n < 4)
			throw std::invalid_argument("scan-time: dm needs even n >= 4");
		for(double t : values_or_grid(c, time_grid, 65))
			pts.push_back({spec::DmEvolution{n, t}, "t", t, opt_seed});
	}
	else if(kind == "dm-h")
	{
		if(n % 2 == 0 || n < 3)
			throw std::invalid_argument("scan-time: dm-h needs odd n >= 3");
		for(double t : values_or_grid(c, time_grid, 65))
			pts.push_back({spec::DmHeisenberg{n, t}, "t", t, opt_seed});
	}
	else
		throw std::invalid_argument("scan-time: kind must be dm or dm-h");
	return pts;
}

std::vector<SweepPoint> plan_scatter(const json& c)
{
	const auto kind = get<std::string>(c, "kind");
	const int samples = get<int>(c, "samples");
	if(samples < 1)
		throw std::invalid_argument("random-scatter: samples must be >= 1");
	const auto base = c.value("seed", std::uint64_t{1});
	std::vector<SweepPoint> pts;
	if(kind == "diag")
	{
		const int n = get<int>(c, "n");
		check_cap(n, c);
		for(int i = 0; i < samples; ++i)
		{
			const auto s = derive_seed(base, static_cast<std::uint64_t>(i));
			pts.push_back({spec::DiagRandom{n, s}, "sample", static_cast<double>(i), s});
		}
	}
	else if(kind == "haar")
	{
		const auto dim = c.contains("dim") ? get<std::ptrdiff_t>(c, "dim") : std::ptrdiff_t{1} << get<int>(c, "n");
		check_cap(qubits_for_dim(dim), c);
		for(int i = 0; i < samples; ++i)
		{
			const auto s = derive_seed(base, static_cast<std::uint64_t>(i));
			pts.push_back({spec::Haar{dim, s}, "sample", static_cast<double>(i), s});
		}
	}
	else
		throw std::invalid_argument("random-scatter: kind must be diag or haar");
	return pts;
}

std::vector<SweepPoint> plan_circuit(const json& c, std::uint64_t opt_seed)
{
	if(c.contains("circuit"))
	{
		auto circ = circuit_from_json(c.at("circuit"));
		check_cap(circ.num_qubits, c);
		return {{spec::Brickwork{std::move(circ)}, "none", 0.0, opt_seed}};
	}
	const int n = get<int>(c, "n");
	check_cap(n, c);
	const int samples = c.value("samples", 1);
	if(samples < 1)
		throw std::invalid_argument("circuit: samples must be >= 1");
	const auto mode = c.value("mode", std::string("same"));
	const int depth = c.value("depth", 2);
	const auto base = c.value("seed", std::uint64_t{1});
	std::vector<SweepPoint> pts;
	for(int i = 0; i < samples; ++i)
	{
		const auto s = derive_seed(base, static_cast<std::uint64_t>(i));
		pts.push_back({spec::Brickwork{circuit_preset(n, mode, s, depth)}, "sample", static_cast<double>(i), s});
	}
	return pts;
}

std::uint64_t spec_seed(const UnitarySpec& s, std::uint64_t fallback)
{
	if(const auto* x = std::get_if<spec::DiagRandom>(&s))
		return x->seed;
	if(const auto* x = std::get_if<spec::Haar>(&s))
		return x->seed;
	if(const auto* x = std::get_if<spec::NonDiagOdd>(&s); x && x->inner.kind == zoo::OddInner::Kind::Haar)
		return x->inner.seed;
	return fallback;
}

} // namespace

void check_cap(int n, const json& config)
{
	const int cap = config.value("max_qubits", kDefaultMaxQubits);
	if(n > cap)
		throw DimensionCapError("register of " + std::to_string(n) + " qubits exceeds the cap of " +
		                        std::to_string(cap));
}

std::vector<double> lambda_grid(int points)
{
	if(points < 2)
		throw std::invalid_argument("lambda grid needs at least 2 points");
	std::vector<double> g(static_cast<std::size_t>(points));
	for(int k = 0; k < points; ++k)
		g[static_cast<std::size_t>(k)] = 2.0 * kPi * k / (points - 1);
	return g;
}

std::vector<double> time_grid(int points)
{
	if(points < 2)
		throw std::invalid_argument("time grid needs at least 2 points");
	std::vector<double> g(static_cast<std::size_t>(points));
	for(int k = 0; k < points; ++k)
		g[static_cast<std::size_t>(k)] = kPi * k / (points - 1);
	return g;
}

brickwork::CircuitSpec circuit_preset(int n, const std::string& mode, std::uint64_t seed, int depth)
{
	if(depth < 1)
		throw std::invalid_argument("circuit depth must be >= 1");
	brickwork::CircuitSpec c;
	c.num_qubits = n;
	for(int l = 0; l < depth; ++l)
	{
		const auto parity = (l % 2 == 0) ? zoo::LayerParity::Odd : zoo::LayerParity::Even;
		const auto layer_seed = derive_seed(seed, static_cast<std::uint64_t>(l));
		brickwork::GateSource g;
		if(mode == "same")
			g = brickwork::HaarShared{seed};
		else if(mode == "distinct")
			g = brickwork::HaarShared{layer_seed};
		else if(mode == "per-bond")
			g = brickwork::HaarPerBond{layer_seed};
		else
			throw std::invalid_argument("circuit mode must be same, distinct or per-bond");
		c.layers.push_back({parity, std::move(g)});
	}
	return c;
}

std::vector<SweepPoint> plan(const json& config)
{
	const auto command = get<std::string>(config, "command");
	const auto opt_seed = optimizer_of(config).seed;
	if(command == "power")
	{
		auto s = unitary_spec_from_json(get<json>(config, "spec"));
		check_cap(spec_num_qubits(s), config);
		const auto seed = spec_seed(s, opt_seed);
		return {{std::move(s), "none", 0.0, seed}};
	}
	if(command == "scan-lambda")
		return plan_scan_lambda(config, opt_seed);
	if(command == "scan-time")
		return plan_scan_time(config, opt_seed);
	if(command == "random-scatter")
		return plan_scatter(config);
	if(command == "circuit")
		return plan_circuit(config, opt_seed);
	throw SpecParseError("config: unknown command '" + command + "'");
}

SweepRecord evaluate(const SweepPoint& p, opt::OptimizerConfig cfg, bool timing)
{
	const auto t0 = std::chrono::steady_clock::now();
	const UnitaryMatrix u = build_unitary(p.spec);
	SweepRecord r;
	r.point = p;
	r.e = opt::entangling_power(u, cfg);
	r.d = opt::disentangling_power(u, cfg);
	r.gap = std::abs(r.e.value - r.d.value);
	if(timing)
		r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
	return r;
}

std::vector<SweepRecord> run_points(const std::vector<SweepPoint>& points, const opt::OptimizerConfig& cfg, bool timing)
{
	std::vector<SweepRecord> rows(points.size());
	if(points.size() < 2)
	{
		// Leave the threads to the optimizer's restart loop.
		for(std::size_t i = 0; i < points.size(); ++i)
			rows[i] = evaluate(points[i], cfg, timing);
		return rows;
	}

	std::vector<std::exception_ptr> errors(points.size());
	const auto count = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic)
	for(long i = 0; i < count; ++i)
	{
		const auto k = static_cast<std::size_t>(i);
		try
		{
			rows[k] = evaluate(points[k], cfg, timing);
		}
		catch(...)
		{
			errors[k] = std::current_exception();
		}
	}
	for(const auto& e : errors)
		if(e)
			std::rethrow_exception(e);
	return rows;
}

std::vector<SweepRecord> run_config(const json& config)
{
	return run_points(plan(config), optimizer_of(config), config.value("timing", false));
}

json to_json(const SweepRecord& r)
{
	return {{"unitary", entpower::to_json(r.point.spec)},
	        {"sweep_var", r.point.var},
	        {"value", r.point.value},
	        {"E", r.e.value},
	        {"D", r.d.value},
	        {"gap", r.gap},
	        {"argmax_E", {{"thetas", r.e.argmax.thetas}, {"xis", r.e.argmax.xis}}},
	        {"argmax_D", {{"thetas", r.d.argmax.thetas}, {"xis", r.d.argmax.xis}}},
	        {"ansatz_E", opt::to_string(r.e.ansatz_used)},
	        {"ansatz_D", opt::to_string(r.d.ansatz_used)},
	        {"converged_E", r.e.converged},
	        {"converged_D", r.d.converged},
	        {"evals_E", r.e.evaluations},
	        {"evals_D", r.d.evaluations},
	        {"seed", r.point.seed},
	        {"wall_ms", r.wall_ms}};
}

std::string csv_header() { return "sweep_var,value,E,D,gap,converged_E,converged_D,evals_E,evals_D,seed,wall_ms"; }

std::string csv_row(const SweepRecord& r)
{
	char tail[128];
	std::snprintf(tail, sizeof tail, ",%d,%d,%lld,%lld,%" PRIu64 ",%.3f", r.e.converged ? 1 : 0, r.d.converged ? 1 : 0,
	              r.e.evaluations, r.d.evaluations, r.point.seed, r.wall_ms);
	return r.point.var + "," + fmt_double(r.point.value) + "," + fmt_double(r.e.value) + "," + fmt_double(r.d.value) +
	       "," + fmt_double(r.gap) + tail;
}

void write_csv(std::ostream& os, const std::vector<SweepRecord>& rows)
{
	os << csv_header() << '\n';
	for(const auto& r : rows)
		os << csv_row(r) << '\n';
}

std::string config_hash(const json& config)
{
	std::uint64_t h = 0xcbf29ce484222325ULL;
	for(unsigned char ch : config.dump())
	{
		h ^= ch;
		h *= 0x100000001b3ULL;
	}
	char buf[17];
	std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
	return buf;
}

std::string utc_now()
{
	const std::time_t t = std::time(nullptr);
	std::tm tm{};
	gmtime_r(&t, &tm);
	char buf[32];
	std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
	return buf;
}

namespace
{

std::string host_info()
{
	char name[256] = "unknown";
	gethostname(name, sizeof name - 1);
	utsname u{};
	std::string os = "unknown";
	if(uname(&u) == 0)
		os = std::string(u.sysname) + " " + u.release + " " + u.machine;
	return std::string(name) + "; " + os + "; omp_max_threads=" + std::to_string(omp_get_max_threads());
}

} // namespace

RunManifest make_manifest(const json& config, const std::string& output, const std::string& started)
{
	RunManifest m;
	m.config_hash = config_hash(config);
	m.prng = std::string(kPrngName);
	m.started = started;
	m.finished = utc_now();
	m.host = host_info();
	m.config = config;
	m.output = output;
	return m;
}

json to_json(const RunManifest& m)
{
	return {{"tool_version", m.tool_version}, {"config_hash", m.config_hash}, {"prng", m.prng},
	        {"started", m.started},           {"finished", m.finished},       {"host", m.host},
	        {"config", m.config},             {"output", m.output}};
}

RunManifest manifest_from_json(const json& j)
{
	RunManifest m;
	m.tool_version = get<std::string>(j, "tool_version");
	m.config_hash = get<std::string>(j, "config_hash");
	m.prng = get<std::string>(j, "prng");
	m.started = j.value("started", "");
	m.finished = j.value("finished", "");
	m.host = j.value("host", "");
	m.config = get<json>(j, "config");
	m.output = j.value("output", "");
	if(config_hash(m.config) != m.config_hash)
		throw SpecParseError("manifest: config hash does not match its config");
	if(m.prng != kPrngName)
		throw SpecParseError("manifest: recorded PRNG '" + m.prng + "' differs from this build's '" +
		                     std::string(kPrngName) + "'");
	return m;
}

} // namespace entpower::exp
