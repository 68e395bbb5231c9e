// Acceptance suite: one PASS/FAIL line per criterion. Detail lines start with
// two spaces. Run everything, or a single criterion with --criterion k.

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"

#include "entpower/closed_form.hpp"
#include "entpower/experiments.hpp"
#include "entpower/ggm.hpp"
#include "entpower/optimizer.hpp"
#include "entpower/random.hpp"
#include "entpower/tensor.hpp"
#include "entpower/zoo.hpp"

using namespace entpower;
using nlohmann::json;

namespace
{

constexpr double kEqual = 2e-4;
constexpr double kDisparity = 0.01;

struct Outcome
{
	bool pass = true;
	std::vector<std::string> notes;

	void note(const char* fmt, ...) __attribute__((format(printf, 2, 3)))
	{
		char buf[512];
		va_list ap;
		va_start(ap, fmt);
		std::vsnprintf(buf, sizeof buf, fmt, ap);
		va_end(ap);
		notes.emplace_back(buf);
		std::printf("  %s\n", buf);
		std::fflush(stdout);
	}

	void require(bool ok, const char* what)
	{
		if(!ok)
		{
			pass = false;
			note("violated: %s", what);
		}
	}
};

class Stopwatch
{
public:
	[[nodiscard]] double seconds() const
	{
		return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
	}

private:
	std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

std::vector<exp::SweepRecord> run(const std::vector<exp::SweepPoint>& pts, const opt::OptimizerConfig& cfg = {})
{
	return exp::run_points(pts, cfg);
}

// Interior grid points of (lo, hi), ordered from the middle outward.
std::vector<double> interior_middle_out(const std::vector<double>& grid, double lo, double hi)
{
	std::vector<double> in;
	for(double x : grid)
		if(x > lo + 1e-9 && x < hi - 1e-9)
			in.push_back(x);
	const double mid = 0.5 * (lo + hi);
	std::stable_sort(in.begin(), in.end(), [&](double a, double b) { return std::abs(a - mid) < std::abs(b - mid); });
	return in;
}

// First point of `candidates` whose gap exceeds `threshold`, evaluating one
// point at a time so the search stops as soon as the disparity shows up.
template <class MakeSpec>
bool find_gap(Outcome& o, const char* label, const std::vector<double>& candidates, MakeSpec make, double threshold)
{
	for(double x : candidates)
	{
		const auto r = exp::evaluate({make(x), "x", x, 0}, {});
		if(r.gap > threshold)
		{
			o.note("%s: gap %.6f at %.6f (E %.7f, D %.7f)", label, r.gap, x, r.e.value, r.d.value);
			return true;
		}
	}
	o.note("%s: no gap above %g among %zu points", label, threshold, candidates.size());
	return false;
}

Outcome criterion1()
{
	Outcome o;
	Stopwatch sw;
	double worst_ghz = 0.0;
	for(int n = 3; n <= 6; ++n)
		worst_ghz = std::max(worst_ghz, std::abs(ggm::ggm(tensor::ghz_state(n)).value - 0.5));
	const double w = std::abs(ggm::ggm(tensor::w_state(3)).value - 1.0 / 3.0);
	Rng rng(1);
	double worst_product = 0.0;
	for(int k = 0; k < 1000; ++k)
	{
		const int n = 2 + k % 7;
		opt::FSPoint p;
		for(int q = 0; q < n; ++q)
		{
			p.thetas.push_back(rng.uniform(0, kPi));
			p.xis.push_back(rng.uniform(0, 2 * kPi));
		}
		worst_product = std::max(worst_product, ggm::ggm(opt::to_state(p)).value);
	}
	o.note("GHZ N=3..6 max |G - 1/2| = %.3g; W3 |G - 1/3| = %.3g; max G over 1000 products = %.3g", worst_ghz, w,
	       worst_product);
	o.require(worst_ghz <= 1e-10, "GHZ value");
	o.require(w <= 1e-10, "W value");
	o.require(worst_product <= 1e-10, "product states");
	o.note("runtime %.2f s", sw.seconds());
	o.require(sw.seconds() < 10.0, "runtime < 10 s");
	return o;
}

Outcome criterion2()
{
	Outcome o;
	Stopwatch sw;
	Rng rng(2);
	const auto u_of = [](double phi) { return zoo::diag_single_phase(3, phi); };
	double worst_rho = 0.0, worst_eig = 0.0;
	for(int k = 0; k < 1000; ++k)
	{
		const std::array<double, 3> th{rng.uniform(0, kPi), rng.uniform(0, kPi), rng.uniform(0, kPi)};
		const double phi = rng.uniform(0, 2 * kPi);
		const auto s = tensor::apply_unitary(u_of(phi), opt::to_state({{th[0], th[1], th[2]}, {0, 0, 0}}));
		for(int i = 1; i <= 3; ++i)
		{
			const auto r = closed_form::rho3_entries(i, th, phi);
			const int keep[] = {i};
			const Matrix rho = tensor::partial_trace(s, keep).matrix();
			Matrix m(2, 2);
			m << r.a, r.b, std::conj(r.b), r.c;
			worst_rho = std::max(worst_rho, (rho - m).cwiseAbs().maxCoeff());
		}

		const double t = th[0];
		const auto eq = tensor::apply_unitary(u_of(phi), opt::to_state({{t, t, t}, {0, 0, 0}}));
		const auto ev = closed_form::eigvals3(t, phi);
		for(int i = 1; i <= 3; ++i)
		{
			const int keep[] = {i};
			const RealVector num = tensor::hermitian_eigenvalues(tensor::partial_trace(eq, keep).matrix());
			worst_eig = std::max({worst_eig, std::abs(num[0] - ev.plus), std::abs(num[1] - ev.minus)});
		}
	}
	double worst_even = 0.0;
	for(int k = 0; k < 64; ++k)
	{
		const double phi = 2 * kPi * k / 64;
		worst_even = std::max(worst_even,
		                      std::abs(closed_form::maximize3(phi).value - closed_form::maximize3(-phi).value));
	}
	o.note("rho entries vs partial trace %.3g; eigenvalues vs numeric spectrum %.3g; max over theta odd part %.3g",
	       worst_rho, worst_eig, worst_even);
	o.require(worst_rho <= 1e-12, "rho3 entries within 1e-12");
	o.require(worst_eig <= 1e-10, "eigenvalues within 1e-10");
	o.require(worst_even <= 1e-10, "even in phi within 1e-10");
	o.note("runtime %.2f s", sw.seconds());
	o.require(sw.seconds() < 30.0, "runtime < 30 s");
	return o;
}

Outcome criterion3()
{
	Outcome o;
	Stopwatch sw;
	std::vector<exp::SweepPoint> pts;
	for(int n = 3; n <= 5; ++n)
	{
		for(double phi : {kPi / 4, kPi / 2, kPi})
			pts.push_back({spec::DiagSinglePhase{n, phi}, "phi", phi, 0});
		for(int i = 0; i < 100; ++i)
		{
			const auto s = derive_seed(3000 + static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(i));
			pts.push_back({spec::DiagRandom{n, s}, "sample", static_cast<double>(i), s});
		}
	}
	const auto rows = run(pts);
	for(int n = 3; n <= 5; ++n)
	{
		double worst_fixed = 0.0, worst_random = 0.0;
		for(const auto& r : rows)
		{
			if(spec_num_qubits(r.point.spec) != n)
				continue;
			double& worst = r.point.var == "phi" ? worst_fixed : worst_random;
			worst = std::max(worst, r.gap);
		}
		o.note("N=%d: max |E - D| single-phase %.3g, 100 random diagonals %.3g", n, worst_fixed, worst_random);
		o.require(std::max(worst_fixed, worst_random) <= kEqual, "|E - D| <= 2e-4");
	}
	o.note("runtime %.1f s", sw.seconds());
	o.require(sw.seconds() < 1800.0, "runtime < 30 min");
	return o;
}

Outcome criterion4()
{
	Outcome o;
	const auto grid = exp::lambda_grid();
	const std::vector<double> special{0.0, kPi / 4, kPi / 2, 3 * kPi / 4, kPi};

	// N = 4: the whole [0, pi] half of the default grid.
	Stopwatch sw4;
	std::vector<exp::SweepPoint> pts;
	for(double l : grid)
		if(l <= kPi + 1e-9)
			pts.push_back({spec::NonDiagEven{4, l}, "lambda", l, 0});
	const auto rows = run(pts);
	auto max_gap_in = [&](double lo, double hi, double& at) {
		double best = 0.0;
		for(const auto& r : rows)
			if(r.point.value > lo + 1e-9 && r.point.value < hi - 1e-9 && r.gap > best)
			{
				best = r.gap;
				at = r.point.value;
			}
		return best;
	};
	double at1 = 0.0, at2 = 0.0;
	const double g1 = max_gap_in(kPi / 4, kPi / 2, at1);
	const double g2 = max_gap_in(kPi / 2, 3 * kPi / 4, at2);
	o.note("N=4: max gap %.6f in (pi/4, pi/2) at %.4f; %.6f in (pi/2, 3pi/4) at %.4f", g1, at1, g2, at2);
	o.require(g1 > kDisparity, "N=4 disparity in (pi/4, pi/2)");
	o.require(g2 > kDisparity, "N=4 disparity in (pi/2, 3pi/4)");
	for(const auto& r : rows)
		for(double s : special)
			if(std::abs(r.point.value - s) < 1e-9)
			{
				o.note("N=4: lambda %.4f  E %.7f  D %.7f  gap %.3g", s, r.e.value, r.d.value, r.gap);
				if(r.gap > kEqual)
					o.require(false, "N=4 gap <= 2e-4 at the special points");
			}
	o.note("N=4 runtime %.1f s", sw4.seconds());
	o.require(sw4.seconds() < 3600.0, "N=4 runtime < 1 h");

	// N = 6: same pattern; the interior search stops at the first disparity.
	Stopwatch sw6;
	std::vector<exp::SweepPoint> sp;
	for(double s : special)
		sp.push_back({spec::NonDiagEven{6, s}, "lambda", s, 0});
	for(const auto& r : run(sp))
	{
		o.note("N=6: lambda %.4f  E %.7f  D %.7f  gap %.3g", r.point.value, r.e.value, r.d.value, r.gap);
		if(r.gap > kEqual)
			o.require(false, "N=6 gap <= 2e-4 at the special points");
	}
	const auto nd6 = [](double l) { return UnitarySpec{spec::NonDiagEven{6, l}}; };
	o.require(find_gap(o, "N=6 (pi/4, pi/2)", interior_middle_out(grid, kPi / 4, kPi / 2), nd6, kDisparity),
	          "N=6 disparity in (pi/4, pi/2)");
	o.require(find_gap(o, "N=6 (pi/2, 3pi/4)", interior_middle_out(grid, kPi / 2, 3 * kPi / 4), nd6, kDisparity),
	          "N=6 disparity in (pi/2, 3pi/4)");
	o.note("N=6 runtime %.1f s", sw6.seconds());
	o.require(sw6.seconds() < 6 * 3600.0, "N=6 runtime < 6 h");
	return o;
}

Outcome criterion5()
{
	Outcome o;
	const auto grid = exp::lambda_grid();

	// N = 3: whole default grid (cheap).
	std::vector<exp::SweepPoint> pts;
	for(double l : grid)
		pts.push_back({spec::NonDiagOdd{3, l, {}}, "lambda", l, 0});
	const auto rows = run(pts);
	double near = 0.0, near_at = 0.0;
	int disparate = 0;
	std::string zeros;
	for(const auto& r : rows)
	{
		const double l = r.point.value;
		if(std::abs(l - kPi / 2) <= kPi / 8 + 1e-9 && r.gap > near)
		{
			near = r.gap;
			near_at = l;
		}
		if(r.gap > kDisparity)
			++disparate;
		if(r.gap <= kEqual)
		{
			char buf[32];
			std::snprintf(buf, sizeof buf, "%s%.4f", zeros.empty() ? "" : ", ", l);
			zeros += buf;
		}
	}
	o.note("N=3: max gap within pi/8 of pi/2 is %.6f at %.4f; %d of %zu grid points have gap > 0.01", near, near_at,
	       disparate, rows.size());
	o.note("N=3: zero-gap grid points: %s", zeros.c_str());
	o.require(near > kDisparity, "N=3 disparity near pi/2");
	o.require(rows.front().gap <= kEqual && rows.back().gap <= kEqual, "N=3 zero gap at lambda = 0 and 2 pi");

	// N = 5: endpoints plus a middle-out search for the disparity region.
	const auto nd5 = [](double l) { return UnitarySpec{spec::NonDiagOdd{5, l, {}}}; };
	for(const auto& r : run({{nd5(0.0), "lambda", 0.0, 0}, {nd5(2 * kPi), "lambda", 2 * kPi, 0}}))
	{
		o.note("N=5: lambda %.4f  E %.7f  D %.7f  gap %.3g", r.point.value, r.e.value, r.d.value, r.gap);
		o.require(r.gap <= kEqual, "N=5 zero gap at the endpoints");
	}
	o.require(find_gap(o, "N=5", interior_middle_out(grid, 0.0, kPi), nd5, kDisparity),
	          "N=5 disparity region nonempty");
	return o;
}

Outcome criterion6()
{
	Outcome o;
	Stopwatch sw;
	const auto grid = exp::time_grid();
	const auto dm = [](double t) { return UnitarySpec{spec::DmEvolution{4, t}}; };
	const auto dmh = [](double t) { return UnitarySpec{spec::DmHeisenberg{3, t}}; };

	std::vector<exp::SweepPoint> pts;
	for(double t : {0.0, kPi / 2, kPi})
		pts.push_back({dm(t), "t", t, 0});
	for(int k = 0; k <= 4; ++k)
		pts.push_back({dmh(k * kPi / 4), "t", k * kPi / 4, 0});
	for(const auto& r : run(pts))
	{
		o.note("%s t %.4f  E %.7f  D %.7f  gap %.3g", spec_kind(r.point.spec).c_str(), r.point.value, r.e.value,
		       r.d.value, r.gap);
		if(r.gap > kEqual)
			o.require(false, "gap <= 2e-4 at the listed times");
	}
	o.require(find_gap(o, "DM N=4 (0, pi/2)", interior_middle_out(grid, 0.0, kPi / 2), dm, 0.005),
	          "DM disparity in (0, pi/2)");
	o.require(find_gap(o, "DM N=4 (pi/2, pi)", interior_middle_out(grid, kPi / 2, kPi), dm, 0.005),
	          "DM disparity in (pi/2, pi)");
	o.require(find_gap(o, "DM-H N=3 (0, pi)", interior_middle_out(grid, 0.0, kPi), dmh, 0.005),
	          "DM-H disparity at an interior point");
	o.note("runtime %.1f s", sw.seconds());
	o.require(sw.seconds() < 7200.0, "runtime < 2 h");
	return o;
}

Outcome criterion7(const std::string& out_dir)
{
	Outcome o;
	const json config = {{"command", "random-scatter"}, {"kind", "haar"}, {"dim", 8}, {"samples", 100}, {"seed", 7}};
	const auto started = exp::utc_now();
	const auto rows = exp::run_config(config);
	const std::string path = out_dir + "/haar_scatter.csv";
	{
		std::ofstream f(path);
		exp::write_csv(f, rows);
		std::ofstream m(path + ".manifest.json");
		m << exp::to_json(exp::make_manifest(config, path, started)).dump(2) << "\n";
	}
	std::vector<double> gaps;
	for(const auto& r : rows)
		gaps.push_back(r.gap);
	std::sort(gaps.begin(), gaps.end());
	const double median = 0.5 * (gaps[49] + gaps[50]);
	const auto off = std::count_if(gaps.begin(), gaps.end(), [](double g) { return g > kDisparity; });
	o.note("100 Haar samples at dim 8: max gap %.5f, median %.5f, %ld with gap > 0.01, %ld with gap > 1e-3",
	       gaps.back(), median, static_cast<long>(off),
	       static_cast<long>(std::count_if(gaps.begin(), gaps.end(), [](double g) { return g > 1e-3; })));
	o.note("scatter written to %s", path.c_str());
	o.require(gaps.back() > 0.02, "max gap > 0.02");
	o.require(median > 1e-3, "median gap > 1e-3");
	std::ifstream check(path);
	const auto lines = std::count(std::istreambuf_iterator<char>(check), std::istreambuf_iterator<char>(), '\n');
	o.require(lines == 101, "scatter CSV has a header and 100 rows");
	o.require(off > 0, "points leave the diagonal");
	return o;
}

Outcome criterion8()
{
	Outcome o;
	Stopwatch sw;
	struct Case
	{
		int n;
		const char* mode;
	};
	int idx = 0;
	for(const Case c : {Case{4, "same"}, Case{3, "same"}, Case{3, "distinct"}})
	{
		std::vector<exp::SweepPoint> pts;
		for(int i = 0; i < 20; ++i)
		{
			const auto s = derive_seed(8000 + static_cast<std::uint64_t>(idx), static_cast<std::uint64_t>(i));
			pts.push_back({spec::Brickwork{exp::circuit_preset(c.n, c.mode, s)}, "sample", static_cast<double>(i), s});
		}
		++idx;
		const auto rows = run(pts);
		int big = 0;
		double worst = 0.0;
		for(const auto& r : rows)
		{
			big += r.gap > kDisparity;
			worst = std::max(worst, r.gap);
		}
		o.note("N=%d %s gates: %d of 20 seeds with gap > 0.01; max gap %.3g", c.n, c.mode, big, worst);
		if(c.n == 3 && std::string(c.mode) == "same")
			o.require(worst <= kEqual, "N=3 identical layers: gap <= 2e-4 for all seeds");
		else
			o.require(big >= 10, "gap > 0.01 for at least half the seeds");
	}
	o.note("runtime %.1f s", sw.seconds());
	o.require(sw.seconds() < 3600.0, "runtime < 1 h");
	return o;
}

Outcome criterion9()
{
	Outcome o;
	Stopwatch sw;
	std::vector<std::pair<std::string, UnitaryMatrix>> named;
	auto add = [&](const char* label, UnitaryMatrix u) { named.emplace_back(label, std::move(u)); };
	add("identity", zoo::identity(3));
	add("diag-phase pi/4", zoo::diag_single_phase(3, kPi / 4));
	add("diag-phase pi/2", zoo::diag_single_phase(3, kPi / 2));
	add("diag-phase pi", zoo::diag_single_phase(3, kPi));
	add("diag-random", zoo::diag_random(3, 1));
	for(double l : {kPi / 4, kPi / 2, 3 * kPi / 4, kPi})
	{
		char b[32];
		std::snprintf(b, sizeof b, "nd-odd %.4f", l);
		add(b, zoo::und_odd(3, l));
	}
	add("nd-odd haar-inner", zoo::und_odd(3, 1.0, {zoo::OddInner::Kind::Haar, 5, zoo::OmegaVariant::MinusOne}));
	for(double t : {kPi / 8, kPi / 4, 3 * kPi / 8})
	{
		char b[32];
		std::snprintf(b, sizeof b, "dm-h %.4f", t);
		add(b, zoo::u_dm_h(3, t));
	}
	add("haar", zoo::haar_random(8, 1));
	add("brickwork same", brickwork::build_circuit_unitary(exp::circuit_preset(3, "same", 1)));
	add("brickwork distinct", brickwork::build_circuit_unitary(exp::circuit_preset(3, "distinct", 1)));

	opt::OptimizerConfig phase_free;
	phase_free.ansatze = {opt::Ansatz::Symmetric, opt::Ansatz::OddEven, opt::Ansatz::EdgeBulk, opt::Ansatz::NoPhases};

	for(const auto& [label, u] : named)
		for(const bool adjoint : {false, true})
		{
			const UnitaryMatrix v = adjoint ? u.adjoint() : u;
			const double oracle = opt::brute_force_power(v, 61, false);
			const double full = opt::entangling_power(v).value;
			const double restricted = opt::entangling_power(v, phase_free).value;
			const bool ok = full >= oracle - 1e-9 && restricted >= oracle - 1e-9 && restricted <= oracle + 5e-3;
			o.note("%-20s %s  grid61 %.6f  optimizer %.6f  phase-free optimizer %.6f%s", label.c_str(),
			       adjoint ? "D" : "E", oracle, full, restricted, ok ? "" : "  <-- outside");
			if(!ok)
			{
				o.pass = false;
				o.note("%-20s %s  finer grid181 %.6f (the grid-61 oracle is a lower bound)", label.c_str(),
				       adjoint ? "D" : "E", opt::brute_force_power(v, 181, false));
			}
		}
	o.note("runtime %.1f s", sw.seconds());
	o.require(sw.seconds() < 1200.0, "runtime < 20 min");
	return o;
}

std::string csv_of(const json& config)
{
	std::ostringstream s;
	exp::write_csv(s, exp::run_config(config));
	return s.str();
}

Outcome criterion10(const std::string& out_dir)
{
	Outcome o;
	const std::vector<json> configs = {
		{{"command", "scan-lambda"}, {"kind", "nd-odd"}, {"n", 3}, {"grid", 9}, {"optimizer", {{"restarts", 4}}}},
		{{"command", "random-scatter"}, {"kind", "haar"}, {"dim", 8}, {"samples", 6}, {"seed", 3}},
		{{"command", "circuit"}, {"n", 4}, {"mode", "per-bond"}, {"samples", 3}, {"seed", 2},
		 {"optimizer", {{"restarts", 4}}}},
		{{"command", "power"}, {"spec", {{"kind", "dm"}, {"n", 4}, {"t", 0.5}}}, {"optimizer", {{"restarts", 6}}}},
	};
	const int saved = omp_get_max_threads();
	int k = 0;
	for(const auto& config : configs)
	{
		const std::string path = out_dir + "/replay_" + std::to_string(k++) + ".csv";
		omp_set_num_threads(1);
		const auto started = exp::utc_now();
		const std::string original = csv_of(config);
		{
			std::ofstream(path) << original;
			std::ofstream(path + ".manifest.json") << exp::to_json(exp::make_manifest(config, path, started)).dump(2);
		}
		std::ifstream mf(path + ".manifest.json");
		const auto manifest = exp::manifest_from_json(json::parse(mf));
		std::ifstream cf(manifest.output);
		const std::string on_disk((std::istreambuf_iterator<char>(cf)), std::istreambuf_iterator<char>());
		bool same = on_disk == original;
		for(int threads : {1, 2, 3, 4})
		{
			omp_set_num_threads(threads);
			same = same && csv_of(manifest.config) == on_disk;
		}
		o.note("%-14s %zu bytes, regenerated at 1-4 threads: %s", config.at("command").get<std::string>().c_str(),
		       on_disk.size(), same ? "identical" : "DIFFERENT");
		o.require(same, "byte-identical replay");
	}
	omp_set_num_threads(saved);
	return o;
}

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"acceptance checks"};
	int only = 0;
	std::string out_dir = ".";
	app.add_option("--criterion", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
	app.add_option("--out-dir", out_dir, "where the scatter and replay CSVs go");
	CLI11_PARSE(app, argc, argv);
	std::filesystem::create_directories(out_dir);

	const std::vector<std::pair<const char*, std::function<Outcome()>>> all = {
		{"GGM correctness", criterion1},
		{"three-qubit closed form", criterion2},
		{"diagonal equality", criterion3},
		{"even-N construction disparity", criterion4},
		{"odd-N construction disparity", criterion5},
		{"Hamiltonian sweeps", criterion6},
		{"Haar disparity", [&] { return criterion7(out_dir); }},
		{"brickwork even/odd contrast", criterion8},
		{"oracle consistency", criterion9},
		{"determinism", [&] { return criterion10(out_dir); }},
	};
	bool ok = true;
	for(std::size_t i = 0; i < all.size(); ++i)
	{
		const int id = static_cast<int>(i) + 1;
		if(only != 0 && only != id)
			continue;
		std::printf("criterion %d: %s\n", id, all[i].first);
		std::fflush(stdout);
		Stopwatch sw;
		const Outcome r = all[i].second();
		std::printf("%s criterion %d (%s) [%.1f s]\n", r.pass ? "PASS" : "FAIL", id, all[i].first, sw.seconds());
		std::fflush(stdout);
		ok = ok && r.pass;
	}
	return ok ? 0 : 1;
}
