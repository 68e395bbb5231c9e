#include "doctest.h"

#include "helpers.hpp"

#include "entpower/closed_form.hpp"
#include "entpower/ggm.hpp"
#include "entpower/optimizer.hpp"
#include "entpower/zoo.hpp"

using namespace entpower;
using namespace entpower::closed_form;

namespace
{

PureState image(const std::array<double, 3>& t, double phi)
{
	const opt::FSPoint p{{t[0], t[1], t[2]}, {0.0, 0.0, 0.0}};
	return tensor::apply_unitary(zoo::diag_single_phase(3, phi), opt::to_state(p));
}

} // namespace

TEST_SUITE("closed-form")
{

TEST_CASE("rho3 entries at the corners")
{
	for(int i = 1; i <= 3; ++i)
	{
		const auto z = rho3_entries(i, {0, 0, 0}, 1.0);
		CHECK(z.a == doctest::Approx(1.0));
		CHECK(std::abs(z.b) < 1e-15);
		CHECK(std::abs(z.c) < 1e-15);
		const auto o = rho3_entries(i, {kPi, kPi, kPi}, 1.0);
		CHECK(std::abs(o.a) < 1e-15);
		CHECK(std::abs(o.b) < 1e-15);
		CHECK(o.c == doctest::Approx(1.0));
	}
	const auto h = rho3_entries(1, {kPi / 2, kPi / 2, kPi / 2}, kPi);
	CHECK(std::abs(h.b - 0.25) < 1e-15);
}

TEST_CASE("rho3 entries reproduce the partial trace")
{
	Rng rng(41);
	for(int rep = 0; rep < 1000; ++rep)
	{
		const std::array<double, 3> t{rng.uniform(0, kPi), rng.uniform(0, kPi), rng.uniform(0, kPi)};
		const double phi = rng.uniform(0, 2 * kPi);
		const auto s = image(t, phi);
		for(int i = 1; i <= 3; ++i)
		{
			const auto r = rho3_entries(i, t, phi);
			CHECK(std::abs(r.a + r.c - 1.0) < 1e-12);
			const int keep[] = {i};
			const Matrix rho = tensor::partial_trace(s, keep).matrix();
			Matrix m(2, 2);
			m << r.a, r.b, std::conj(r.b), r.c;
			CHECK(th::dist(rho, m) < 1e-12);
		}
	}
}

TEST_CASE("A-expression")
{
	CHECK(a_expr3(0.0, 0.3) == doctest::Approx(256.0).epsilon(1e-15));
	CHECK(a_expr3(0.0, kPi) == doctest::Approx(256.0).epsilon(1e-15));
	const auto e = eigvals3(0.0, 1.7);
	CHECK(e.plus == doctest::Approx(1.0));
	CHECK(std::abs(e.minus) < 1e-15);

	Rng rng(43);
	for(int rep = 0; rep < 200; ++rep)
	{
		const double t = rng.uniform(0, kPi), phi = rng.uniform(0, 2 * kPi);
		CHECK(std::abs(a_expr3(t, phi) - a_expr3(t, 2 * kPi - phi)) < 1e-12);
		const auto a = eigvals3(t, phi);
		const auto b = eigvals3(t, -phi);
		CHECK(a.plus == b.plus);
		CHECK(a.minus == b.minus);
		CHECK(std::abs(a.plus + a.minus - 1.0) < 1e-15);
	}

	auto broken = [](double, double) { return -1.0; };
	CHECK_THROWS_AS(eigvals3(0.5, 0.5, broken), std::domain_error);
	auto tiny = [](double, double) { return -1e-12; };
	CHECK(eigvals3(0.5, 0.5, tiny).plus == 0.5);
}

TEST_CASE("eigenvalues match the numeric GGM")
{
	Rng rng(47);
	for(int rep = 0; rep < 1000; ++rep)
	{
		const double t = rng.uniform(0, kPi), phi = rng.uniform(0, 2 * kPi);
		const double g = ggm::ggm(image({t, t, t}, phi)).value;
		CHECK(std::abs((1.0 - eigvals3(t, phi).plus) - g) < 1e-10);
	}
}

TEST_CASE("maximize3")
{
	const auto m = maximize3(kPi);
	CHECK(m.theta == doctest::Approx(1.831056).epsilon(1e-6));
	CHECK(m.value == doctest::Approx(0.3362728).epsilon(1e-6));
	CHECK(maximize3(0.0).value < 1e-12);
	for(double phi = 0.0; phi < 2 * kPi; phi += 0.1)
		CHECK(std::abs(maximize3(phi).value - maximize3(2 * kPi - phi).value) < 1e-12);
}

TEST_CASE("stationarity condition")
{
	CHECK_FALSE(stationarity_check({0, 0, 0}));
	CHECK(stationarity_residuals({0, 0, 0})[0] == doctest::Approx(2.0));

	const double root = std::acos(1.0 - std::sqrt(2.0));
	CHECK(stationarity_check({root, root, root}));
	CHECK(std::abs(stationarity_residuals({1.0, root, root})[0]) < 1e-12);

	// The symmetric maximizer for phi = pi does not satisfy the condition.
	const auto opt = opt::entangling_power(zoo::diag_single_phase(3, kPi));
	CHECK_FALSE(stationarity_check({opt.argmax.thetas[0], opt.argmax.thetas[1], opt.argmax.thetas[2]}));
}

TEST_CASE("second-derivative terms")
{
	const double t = maximize3(kPi).theta;
	for(double v : second_derivative_terms({t, t, t}, kPi))
		CHECK(v < 0.0);
	for(double v : second_derivative_terms({t, t, t}, 0.0))
		CHECK(v == 0.0);
	for(double v : second_derivative_terms({0.0, t, t}, kPi))
		CHECK(v <= 0.0);
}

} // TEST_SUITE
