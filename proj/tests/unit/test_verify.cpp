#include "doctest.h"

#include "entpower/verify.hpp"

using namespace entpower;

TEST_SUITE("verify")
{

TEST_CASE("self-test passes on a correct build")
{
	const auto r = verify::run_all();
	for(const auto& s : r.suites)
	{
		CAPTURE(s.name);
		CAPTURE(s.first_failure);
		CHECK(s.failures == 0);
		CHECK(s.checks > 0);
	}
	CHECK(r.passed());
	CHECK(verify::to_json(r).dump().find("closed-form-vs-numeric") != std::string::npos);
}

TEST_CASE("self-test catches a sign error in the A-expression")
{
	verify::Options o;
	o.a_expr = [](double t, double phi) { return closed_form::a_expr3(t, phi + 3.14159265358979323846); };
	const auto r = verify::run_all(o);
	CHECK_FALSE(r.passed());
}

} // TEST_SUITE
