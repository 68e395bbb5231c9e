#include "entpower/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "entpower/brickwork.hpp"
#include "entpower/ggm.hpp"
#include "entpower/kernels.hpp"
#include "entpower/optimizer.hpp"
#include "entpower/random.hpp"
#include "entpower/tensor.hpp"
#include "entpower/zoo.hpp"

namespace entpower::verify
{

using nlohmann::json;

namespace
{

class Suite
{
public:
	explicit Suite(std::string name) { r_.name = std::move(name); }

	void check(bool ok, const std::function<std::string()>& what)
	{
		++r_.checks;
		if(ok)
			return;
		if(r_.failures++ == 0)
			r_.first_failure = what();
	}

	// Runs `body`; an escaping exception counts as one failed check.
	SuiteReport run(const std::function<void(Suite&)>& body)
	{
		try
		{
			body(*this);
		}
		catch(const std::exception& e)
		{
			check(false, [&] { return std::string("exception: ") + e.what(); });
		}
		return r_;
	}

private:
	SuiteReport r_;
};

std::string describe(const char* label, double got, double want)
{
	std::ostringstream os;
	os.precision(15);
	os << label << ": got " << got << ", expected " << want;
	return os.str();
}

PureState random_state(int n, Rng& rng)
{
	Vector v(std::ptrdiff_t{1} << n);
	for(auto& a : v)
		a = Complex{rng.normal(), rng.normal()};
	v.normalize();
	return PureState(n, v);
}

opt::FSPoint random_point(int n, Rng& rng)
{
	opt::FSPoint p;
	for(int q = 0; q < n; ++q)
	{
		p.thetas.push_back(rng.uniform(0.0, kPi));
		p.xis.push_back(rng.uniform(0.0, 2.0 * kPi));
	}
	return p;
}

void reference_states(Suite& s, const Options& o)
{
	for(int n = 3; n <= 6; ++n)
	{
		const double g = ggm::ggm(tensor::ghz_state(n)).value;
		s.check(std::abs(g - 0.5) <= 1e-10, [&] { return describe("ggm(GHZ)", g, 0.5); });
	}
	const double w = ggm::ggm(tensor::w_state(3)).value;
	s.check(std::abs(w - 1.0 / 3.0) <= 1e-10, [&] { return describe("ggm(W3)", w, 1.0 / 3.0); });

	Rng rng(derive_seed(o.seed, 1));
	for(int k = 0; k < o.samples; ++k)
	{
		const int n = 2 + k % 5;
		const double g = ggm::ggm(opt::to_state(random_point(n, rng))).value;
		s.check(g <= 1e-10, [&] { return describe("ggm(product)", g, 0.0); });
	}
}

void schmidt_symmetry(Suite& s, const Options& o)
{
	Rng rng(derive_seed(o.seed, 2));
	for(int k = 0; k < 50; ++k)
	{
		const int n = 4 + k % 2;
		const PureState st = random_state(n, rng);
		for(const auto& cut : ggm::enumerate_bipartitions(n))
		{
			std::vector<int> rest;
			for(int q = 1; q <= n; ++q)
				if(std::find(cut.keep.begin(), cut.keep.end(), q) == cut.keep.end())
					rest.push_back(q);
			const RealVector a = tensor::hermitian_eigenvalues(tensor::partial_trace(st, cut.keep).matrix());
			const RealVector b = tensor::hermitian_eigenvalues(tensor::partial_trace(st, rest).matrix());
			double err = 0.0;
			for(Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i)
				err = std::max(err, std::abs(a[i] - b[i]));
			s.check(err <= 1e-10, [&] { return describe("Schmidt spectrum mismatch", err, 0.0); });
		}
	}
}

void kernels_agree(Suite& s, const Options& o)
{
	Rng rng(derive_seed(o.seed, 3));
	for(int n = 2; n <= 8; ++n)
	{
		const PureState st = random_state(n, rng);
		const ggm::GgmEvaluator ev(n);
		std::vector<double> a(ev.num_cuts()), b(ev.num_cuts());
		std::span<const Complex> amps(st.amps().data(), static_cast<std::size_t>(st.dim()));
		kernels::max_reduced_eigenvalues_serial(amps, ev.layouts(), a);
		kernels::max_reduced_eigenvalues_omp(amps, ev.layouts(), b);
		double err = 0.0;
		for(std::size_t i = 0; i < a.size(); ++i)
			err = std::max(err, std::abs(a[i] - b[i]));
		s.check(err <= 1e-14, [&] { return describe("cut eigenvalues serial vs omp", err, 0.0); });

		const UnitaryMatrix u = zoo::haar_random(st.dim(), derive_seed(o.seed, 100 + n));
		std::vector<Complex> y1(static_cast<std::size_t>(st.dim())), y2(y1.size());
		kernels::matvec_serial(u.matrix(), amps, y1);
		kernels::matvec_omp(u.matrix(), amps, y2);
		double merr = 0.0;
		for(std::size_t i = 0; i < y1.size(); ++i)
			merr = std::max(merr, std::abs(y1[i] - y2[i]));
		s.check(merr <= 1e-13, [&] { return describe("matvec serial vs omp", merr, 0.0); });
	}
}

void rho3_vs_partial_trace(Suite& s, const Options& o)
{
	Rng rng(derive_seed(o.seed, 4));
	for(int k = 0; k < o.samples; ++k)
	{
		const std::array<double, 3> th{rng.uniform(0.0, kPi), rng.uniform(0.0, kPi), rng.uniform(0.0, kPi)};
		const double phi = rng.uniform(0.0, 2.0 * kPi);
		const PureState out = tensor::apply_unitary(zoo::diag_single_phase(3, phi),
		                                            opt::to_state({{th[0], th[1], th[2]}, {0.0, 0.0, 0.0}}));
		for(int site = 1; site <= 3; ++site)
		{
			const auto e = closed_form::rho3_entries(site, th, phi);
			const int keep[] = {site};
			const Matrix rho = tensor::partial_trace(out, keep).matrix();
			const double err = std::max({std::abs(rho(0, 0) - e.a), std::abs(rho(0, 1) - e.b),
			                             std::abs(rho(1, 0) - std::conj(e.b)), std::abs(rho(1, 1) - e.c)});
			s.check(err <= 1e-12, [&] { return describe("rho3 entries vs partial trace", err, 0.0); });
		}
	}
}

void closed_form_vs_numeric(Suite& s, const Options& o)
{
	Rng rng(derive_seed(o.seed, 5));
	const ggm::GgmEvaluator ev(3);
	for(int k = 0; k < o.samples; ++k)
	{
		const double th = rng.uniform(0.0, kPi);
		const double phi = rng.uniform(0.0, 2.0 * kPi);
		double analytic = 0.0;
		try
		{
			analytic = 1.0 - closed_form::eigvals3(th, phi, o.a_expr).plus;
		}
		catch(const std::exception& e)
		{
			s.check(false, [&] { return std::string("eigvals3 rejected A: ") + e.what(); });
			continue;
		}
		const PureState out =
			tensor::apply_unitary(zoo::diag_single_phase(3, phi), opt::to_state({{th, th, th}, {0.0, 0.0, 0.0}}));
		const double numeric = ggm::ggm(out, kernels::Exec::Serial).value;
		s.check(std::abs(analytic - numeric) <= 1e-10, [&] { return describe("1 - lambda_+ vs ggm", analytic, numeric); });
	}
}

void closed_form_phi_symmetry(Suite& s, const Options& o)
{
	for(int k = 0; k < 64; ++k)
	{
		const double phi = 2.0 * kPi * k / 64;
		const double a = closed_form::maximize3(phi, 10000, o.a_expr).value;
		const double b = closed_form::maximize3(-phi, 10000, o.a_expr).value;
		s.check(std::abs(a - b) <= 1e-10, [&] { return describe("max over theta at phi vs -phi", a, b); });
	}
}

void optimizer_vs_closed_form(Suite& s, const Options& o)
{
	const UnitaryMatrix u = zoo::diag_single_phase(3, kPi);
	const auto e = opt::entangling_power(u);
	const auto d = opt::disentangling_power(u);
	const double want = closed_form::maximize3(kPi, 10000, o.a_expr).value;
	s.check(std::abs(e.value - want) <= 1e-6, [&] { return describe("E(CCZ) vs closed form", e.value, want); });
	s.check(std::abs(e.value - d.value) <= 2e-4, [&] { return describe("E(CCZ) vs D(CCZ)", e.value, d.value); });
	s.check(std::abs(opt::ggm_at(u, e.argmax) - e.value) <= 1e-9,
	        [&] { return describe("E(CCZ) recomputed at argmax", opt::ggm_at(u, e.argmax), e.value); });
}

void adjoint_structure(Suite& s, const Options& o)
{
	for(double lam : {0.3, 1.1, 2.5})
	{
		const UnitaryMatrix u = zoo::und_even(4, lam);
		const UnitaryMatrix odd_inv = zoo::layer_unitary(4, zoo::LayerParity::Odd, zoo::u_lambda(-lam));
		const UnitaryMatrix even_inv = zoo::layer_unitary(4, zoo::LayerParity::Even, zoo::u_lambda(-lam));
		const double err = tensor::frobenius_distance(u.adjoint().matrix(), (even_inv * odd_inv).matrix());
		s.check(err <= 1e-12, [&] { return describe("und_even adjoint", err, 0.0); });
	}
	const brickwork::CircuitSpec c{4,
	                               {{zoo::LayerParity::Odd, brickwork::HaarPerBond{o.seed}},
	                                {zoo::LayerParity::Even, brickwork::HaarShared{o.seed + 1}},
	                                {zoo::LayerParity::Odd, brickwork::HaarShared{o.seed + 2}}}};
	const double err = tensor::frobenius_distance(brickwork::build_circuit_unitary(c).adjoint().matrix(),
	                                              brickwork::build_circuit_unitary(brickwork::adjoint_circuit(c)).matrix());
	s.check(err <= 1e-12, [&] { return describe("circuit adjoint", err, 0.0); });
}

void oracle_consistency(Suite& s, const Options& o)
{
	const std::vector<UnitaryMatrix> named = {
		zoo::identity(3),
		zoo::diag_single_phase(3, kPi),
		zoo::diag_random(3, o.seed),
		zoo::und_odd(3, kPi / 2),
		zoo::u_dm_h(3, kPi / 8),
	};
	opt::OptimizerConfig real_only;
	real_only.restarts = 16;
	real_only.ansatze = {opt::Ansatz::Symmetric, opt::Ansatz::OddEven, opt::Ansatz::EdgeBulk, opt::Ansatz::NoPhases};
	for(const auto& u : named)
	{
		const double oracle = opt::brute_force_power(u, 61, false);
		const double found = opt::entangling_power(u, real_only).value;
		s.check(found >= oracle - 1e-9 && found <= oracle + 5e-3,
		        [&] { return describe("phase-free optimizer vs grid-61 oracle", found, oracle); });
	}
}

} // namespace

bool Report::passed() const
{
	return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.failures == 0; });
}

json to_json(const Report& r)
{
	json suites = json::array();
	for(const auto& s : r.suites)
	{
		json j{{"name", s.name}, {"checks", s.checks}, {"failures", s.failures}, {"passed", s.failures == 0}};
		if(!s.first_failure.empty())
			j["first_failure"] = s.first_failure;
		suites.push_back(std::move(j));
	}
	return {{"passed", r.passed()}, {"suites", suites}};
}

Report run_all(const Options& opts)
{
	const std::vector<std::pair<const char*, void (*)(Suite&, const Options&)>> suites = {
		{"ggm-reference-states", reference_states},
		{"schmidt-symmetry", schmidt_symmetry},
		{"kernels-serial-vs-omp", kernels_agree},
		{"rho3-vs-partial-trace", rho3_vs_partial_trace},
		{"closed-form-vs-numeric", closed_form_vs_numeric},
		{"closed-form-phi-symmetry", closed_form_phi_symmetry},
		{"optimizer-vs-closed-form", optimizer_vs_closed_form},
		{"adjoint-structure", adjoint_structure},
		{"oracle-consistency", oracle_consistency},
	};
	Report r;
	for(const auto& [name, fn] : suites)
		r.suites.push_back(Suite(name).run([&](Suite& s) { fn(s, opts); }));
	return r;
}

} // namespace entpower::verify
