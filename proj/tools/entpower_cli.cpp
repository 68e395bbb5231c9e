// entpower: GGM of states and entangling / disentangling powers of unitaries.
//
// Exit codes: 0 ok, 1 runtime failure (or failed verify / replay mismatch),
// 2 bad arguments or spec, 3 register above the qubit cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "entpower/experiments.hpp"
#include "entpower/ggm.hpp"
#include "entpower/state_io.hpp"
#include "entpower/verify.hpp"

using nlohmann::json;
namespace ex = entpower::exp;

namespace
{

struct Flags
{
	int n = 0;
	long dim = 0;
	std::string kind;
	double lambda = 0.0;
	double phi = 0.0;
	double t = 0.0;
	int grid = 0;
	int samples = 1;
	std::uint64_t seed = 1;
	int restarts = 32;
	int max_evals = 5000;
	std::vector<std::string> ansatze;
	int threads = 0;
	std::string out;
	std::string omega = "paper";
	std::string inner = "uw";
	std::string spec;
	std::string mode = "same";
	int depth = 2;
	int max_qubits = entpower::kDefaultMaxQubits;
	bool timing = false;
	std::vector<double> values;

	// ggm
	std::string named;
	std::string amplitudes;

	// verify / replay
	std::string inject;
	std::string manifest;
	std::string compare;
};

std::uint64_t default_seed()
{
	if(const char* env = std::getenv("ENTPOWER_SEED"))
	{
		try
		{
			return std::stoull(env);
		}
		catch(const std::exception&)
		{
			throw entpower::SpecParseError(std::string("ENTPOWER_SEED is not an unsigned integer: ") + env);
		}
	}
	return 1;
}

// --spec accepts inline JSON or @path.
json read_json_arg(const std::string& arg)
{
	std::string text = arg;
	if(!arg.empty() && arg[0] == '@')
	{
		std::ifstream f(arg.substr(1));
		if(!f)
			throw entpower::SpecParseError("cannot open " + arg.substr(1));
		std::stringstream ss;
		ss << f.rdbuf();
		text = ss.str();
	}
	try
	{
		return json::parse(text);
	}
	catch(const json::parse_error& e)
	{
		throw entpower::SpecParseError(std::string("invalid JSON: ") + e.what());
	}
}

json optimizer_json(const Flags& f)
{
	entpower::opt::OptimizerConfig c;
	c.restarts = f.restarts;
	c.max_evals = f.max_evals;
	c.seed = f.seed;
	for(const auto& a : f.ansatze)
		c.ansatze.push_back(entpower::opt::ansatz_from_string(a));
	c.validate();
	return entpower::opt::to_json(c);
}

json base_config(const std::string& command, const Flags& f)
{
	json c{{"command", command}, {"optimizer", optimizer_json(f)}, {"max_qubits", f.max_qubits}};
	if(f.timing)
		c["timing"] = true;
	return c;
}

// Unitary spec from --spec or from --kind and the scalar flags.
json spec_from_flags(const Flags& f)
{
	if(!f.spec.empty())
		return read_json_arg(f.spec);
	if(f.kind.empty())
		throw entpower::SpecParseError("power: give --spec or --kind");
	json s{{"kind", f.kind}};
	if(f.kind == "haar" && f.dim > 0)
		s["dim"] = f.dim;
	else
		s["n"] = f.n;
	if(f.kind == "nd-even" || f.kind == "nd-odd")
		s["lambda"] = f.lambda;
	if(f.kind == "nd-odd")
	{
		s["inner"] = f.inner;
		s["omega"] = f.omega;
		if(f.inner == "haar")
			s["seed"] = f.seed;
	}
	if(f.kind == "diag-phase")
		s["phi"] = f.phi;
	if(f.kind == "dm" || f.kind == "dm-h")
		s["t"] = f.t;
	if(f.kind == "diag-random" || f.kind == "haar")
		s["seed"] = f.seed;
	return s;
}

void write_text(const std::string& path, const std::string& text)
{
	std::ofstream f(path, std::ios::binary);
	if(!f)
		throw std::runtime_error("cannot write " + path);
	f << text;
}

std::string render_csv(const std::vector<ex::SweepRecord>& rows)
{
	std::ostringstream os;
	ex::write_csv(os, rows);
	return os.str();
}

// Runs a sweep-style config; CSV to --out (plus manifest) or stdout.
int run_sweep(const json& config, const Flags& f)
{
	const auto started = ex::utc_now();
	const auto rows = ex::run_config(config);
	const auto csv = render_csv(rows);
	if(f.out.empty())
	{
		std::cout << csv;
		return 0;
	}
	write_text(f.out, csv);
	write_text(f.out + ".manifest.json", ex::to_json(ex::make_manifest(config, f.out, started)).dump(2) + "\n");
	std::cerr << "wrote " << rows.size() << " rows to " << f.out << "\n";
	return 0;
}

int cmd_ggm(const Flags& f)
{
	std::optional<entpower::PureState> st;
	if(!f.amplitudes.empty())
	{
		std::ifstream in(f.amplitudes);
		if(!in)
			throw std::runtime_error("cannot open " + f.amplitudes);
		st = entpower::io::read_amplitudes(in);
	}
	else if(!f.named.empty())
	{
		ex::check_cap(f.n, json{{"max_qubits", f.max_qubits}});
		st = entpower::io::named_state(f.named, f.n);
	}
	else
		throw entpower::SpecParseError("ggm: give --named or --amplitudes");
	ex::check_cap(st->num_qubits(), json{{"max_qubits", f.max_qubits}});

	const auto r = entpower::ggm::ggm(*st);
	json j{{"n", st->num_qubits()}, {"value", r.value}, {"argmax_cut", r.argmax_cut.keep}, {"max_eigenvalue", r.max_eigenvalue}};
	std::cout << j.dump(2) << "\n";
	return 0;
}

int cmd_power(const Flags& f)
{
	json config = base_config("power", f);
	config["spec"] = spec_from_flags(f);
	const auto started = ex::utc_now();
	const auto rows = ex::run_config(config);
	const auto text = ex::to_json(rows.front()).dump(2) + "\n";
	std::cout << text;
	if(!f.out.empty())
	{
		write_text(f.out, text);
		write_text(f.out + ".manifest.json", ex::to_json(ex::make_manifest(config, f.out, started)).dump(2) + "\n");
	}
	return 0;
}

int cmd_scan(const std::string& command, const Flags& f)
{
	json config = base_config(command, f);
	config["kind"] = f.kind;
	config["n"] = f.n;
	if(f.grid > 0)
		config["grid"] = f.grid;
	if(!f.values.empty())
		config["values"] = f.values;
	if(command == "scan-lambda" && f.kind == "nd-odd")
	{
		config["inner"] = f.inner;
		config["omega"] = f.omega;
		if(f.inner == "haar")
			config["seed"] = f.seed;
	}
	return run_sweep(config, f);
}

int cmd_scatter(const Flags& f)
{
	json config = base_config("random-scatter", f);
	config["kind"] = f.kind;
	if(f.dim > 0)
		config["dim"] = f.dim;
	else
		config["n"] = f.n;
	config["samples"] = f.samples;
	config["seed"] = f.seed;
	return run_sweep(config, f);
}

int cmd_circuit(const Flags& f)
{
	json config = base_config("circuit", f);
	if(!f.spec.empty())
		config["circuit"] = read_json_arg(f.spec);
	else
	{
		config["n"] = f.n;
		config["mode"] = f.mode;
		config["depth"] = f.depth;
		config["samples"] = f.samples;
		config["seed"] = f.seed;
	}
	return run_sweep(config, f);
}

double a_sign_flipped(double t, double phi) { return entpower::closed_form::a_expr3(t, phi + entpower::kPi); }

int cmd_verify(const Flags& f)
{
	entpower::verify::Options o;
	if(f.inject == "a-sign")
		o.a_expr = a_sign_flipped; // flips the sign of the phase-dependent term
	else if(!f.inject.empty())
		throw entpower::SpecParseError("unknown fault '" + f.inject + "' (a-sign)");
	const auto report = entpower::verify::run_all(o);
	std::cout << entpower::verify::to_json(report).dump(2) << "\n";
	return report.passed() ? 0 : 1;
}

int cmd_replay(const Flags& f)
{
	std::ifstream in(f.manifest);
	if(!in)
		throw std::runtime_error("cannot open " + f.manifest);
	json j;
	try
	{
		j = json::parse(in);
	}
	catch(const json::parse_error& e)
	{
		throw entpower::SpecParseError(std::string("manifest is not JSON: ") + e.what());
	}
	const auto m = ex::manifest_from_json(j);
	if(m.config.value("command", "") == "power")
		throw entpower::SpecParseError("replay handles sweep manifests; rerun `power` with the recorded spec instead");
	const auto csv = render_csv(ex::run_config(m.config));

	if(!f.compare.empty())
	{
		std::ifstream old(f.compare, std::ios::binary);
		if(!old)
			throw std::runtime_error("cannot open " + f.compare);
		std::stringstream ss;
		ss << old.rdbuf();
		const bool same = ss.str() == csv;
		std::cout << (same ? "identical" : "DIFFERENT") << "\n";
		return same ? 0 : 1;
	}
	if(f.out.empty())
		std::cout << csv;
	else
		write_text(f.out, csv);
	return 0;
}

void add_optimizer_flags(CLI::App* c, Flags& f)
{
	c->add_option("--seed", f.seed, "Base seed (optimizer and random unitaries); env ENTPOWER_SEED sets the default");
	c->add_option("--restarts", f.restarts, "Optimizer restarts")->check(CLI::PositiveNumber);
	c->add_option("--max-evals", f.max_evals, "Objective evaluations per local run")->check(CLI::PositiveNumber);
	c->add_option("--ansatz", f.ansatze, "Ansatz list (full, no-phases, symmetric, odd-even, edge-bulk); default: automatic")
		->delimiter(',');
	c->add_option("--threads", f.threads, "OpenMP threads (0: runtime default)");
	c->add_option("--max-qubits", f.max_qubits, "Qubit cap");
	c->add_flag("--timing", f.timing, "Record wall_ms (makes CSVs non-reproducible)");
}

} // namespace

int main(int argc, char** argv)
{
	Flags f;
	CLI::App app{"Entangling and disentangling powers of multiqubit unitaries"};
	app.require_subcommand(1);

	auto* ggm = app.add_subcommand("ggm", "GGM of a state");
	ggm->add_option("--named", f.named, "ghz, w, plus or product");
	ggm->add_option("--n", f.n, "Qubits");
	ggm->add_option("--amplitudes", f.amplitudes, "File of 're im' lines");
	ggm->add_option("--max-qubits", f.max_qubits, "Qubit cap");

	auto* power = app.add_subcommand("power", "E, D and |E - D| of one unitary");
	power->add_option("--spec", f.spec, "Unitary spec JSON or @file");
	power->add_option("--kind", f.kind, "identity, diag-phase, diag-random, nd-even, nd-odd, dm, dm-h, haar");
	power->add_option("--n", f.n, "Qubits");
	power->add_option("--dim", f.dim, "Matrix size (haar)");
	power->add_option("--lambda", f.lambda, "Gate angle (nd-even, nd-odd)");
	power->add_option("--phi", f.phi, "Phase (diag-phase)");
	power->add_option("--t", f.t, "Time (dm, dm-h)");
	power->add_option("--inner", f.inner, "nd-odd inner gate: uw or haar");
	power->add_option("--omega-variant", f.omega, "paper or cube-root");
	power->add_option("--out", f.out, "Also write the JSON record (and manifest) here");
	add_optimizer_flags(power, f);

	auto* scan_l = app.add_subcommand("scan-lambda", "Sweep lambda over [0, 2 pi]");
	auto* scan_t = app.add_subcommand("scan-time", "Sweep t over [0, pi]");
	for(auto* c : {scan_l, scan_t})
	{
		c->add_option("--kind", f.kind, c == scan_l ? "nd-even or nd-odd" : "dm or dm-h")->required();
		c->add_option("--n", f.n, "Qubits")->required();
		c->add_option("--grid", f.grid, "Grid points (default 97 for lambda, 65 for t)");
		c->add_option("--values", f.values, "Explicit sweep values instead of a grid")->delimiter(',');
		c->add_option("--out", f.out, "CSV path (manifest written alongside); stdout if omitted");
		add_optimizer_flags(c, f);
	}
	scan_l->add_option("--inner", f.inner, "nd-odd inner gate: uw or haar");
	scan_l->add_option("--omega-variant", f.omega, "paper or cube-root");

	auto* scatter = app.add_subcommand("random-scatter", "E vs D for random diagonal or Haar unitaries");
	scatter->add_option("--kind", f.kind, "diag or haar")->required();
	scatter->add_option("--n", f.n, "Qubits");
	scatter->add_option("--dim", f.dim, "Matrix size (haar)");
	scatter->add_option("--samples", f.samples, "Number of samples")->check(CLI::PositiveNumber);
	scatter->add_option("--out", f.out, "CSV path; stdout if omitted");
	add_optimizer_flags(scatter, f);

	auto* circuit = app.add_subcommand("circuit", "Brickwork circuit study");
	circuit->add_option("--spec", f.spec, "Circuit JSON or @file (overrides the preset)");
	circuit->add_option("--n", f.n, "Qubits");
	circuit->add_option("--mode", f.mode, "same, distinct or per-bond");
	circuit->add_option("--depth", f.depth, "Layers, alternating odd/even starting odd");
	circuit->add_option("--samples", f.samples, "Number of seeds")->check(CLI::PositiveNumber);
	circuit->add_option("--out", f.out, "CSV path; stdout if omitted");
	add_optimizer_flags(circuit, f);

	auto* verify = app.add_subcommand("verify", "Run the self-test suites");
	verify->add_option("--inject-fault", f.inject, "Deliberately break a component (a-sign)");
	verify->add_option("--threads", f.threads, "OpenMP threads");

	auto* replay = app.add_subcommand("replay", "Regenerate a CSV from its manifest");
	replay->add_option("--manifest", f.manifest, "Manifest JSON")->required();
	replay->add_option("--out", f.out, "CSV path; stdout if omitted");
	replay->add_option("--compare", f.compare, "Compare with this CSV byte for byte instead of writing");
	replay->add_option("--threads", f.threads, "OpenMP threads");

	try
	{
		f.seed = default_seed();
		app.parse(argc, argv);
	}
	catch(const CLI::ParseError& e)
	{
		const int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}
	catch(const std::exception& e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}

	try
	{
		if(f.threads > 0)
			omp_set_num_threads(f.threads);
		if(*ggm)
			return cmd_ggm(f);
		if(*power)
			return cmd_power(f);
		if(*scan_l)
			return cmd_scan("scan-lambda", f);
		if(*scan_t)
			return cmd_scan("scan-time", f);
		if(*scatter)
			return cmd_scatter(f);
		if(*circuit)
			return cmd_circuit(f);
		if(*verify)
			return cmd_verify(f);
		if(*replay)
			return cmd_replay(f);
	}
	catch(const ex::DimensionCapError& e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 3;
	}
	catch(const std::logic_error& e) // spec parse errors, bad dimensions, failed invariants
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	catch(const nlohmann::json::exception& e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	catch(const std::exception& e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 1;
}
