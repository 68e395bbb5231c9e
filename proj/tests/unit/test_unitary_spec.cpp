#include "doctest.h"

#include "helpers.hpp"

#include "entpower/unitary_spec.hpp"

using namespace entpower;
using nlohmann::json;

TEST_SUITE("unitary-spec")
{

TEST_CASE("JSON round trip rebuilds the same matrix")
{
	const std::vector<json> specs = {
		{{"kind", "identity"}, {"n", 3}},
		{{"kind", "diag-phase"}, {"n", 3}, {"phi", 3.14159}},
		{{"kind", "diag-random"}, {"n", 4}, {"seed", 11}},
		{{"kind", "nd-even"}, {"n", 4}, {"lambda", 1.178}},
		{{"kind", "nd-odd"}, {"n", 3}, {"lambda", 1.57}, {"inner", "uw"}, {"omega", "paper"}},
		{{"kind", "nd-odd"}, {"n", 5}, {"lambda", 0.4}, {"inner", "haar"}, {"seed", 7}},
		{{"kind", "dm"}, {"n", 4}, {"t", 0.785}},
		{{"kind", "dm-h"}, {"n", 3}, {"t", 0.4}},
		{{"kind", "haar"}, {"dim", 8}, {"seed", 3}},
		{{"kind", "brickwork"},
		 {"circuit",
		  {{"n", 4},
		   {"layers",
		    {{{"parity", "odd"}, {"gate", {{"source", "haar-per-bond"}, {"seed", 2}}}},
		     {{"parity", "even"}, {"gate", {{"source", "hamiltonian"}, {"bond", "dm"}, {"t", 0.3}}}}}}}}},
	};
	for(const auto& j : specs)
	{
		CAPTURE(j.dump());
		const auto s = unitary_spec_from_json(j);
		const auto u = build_unitary(s);
		CHECK(u.num_qubits() == spec_num_qubits(s));
		CHECK(spec_kind(s) == j.at("kind").get<std::string>());
		const auto again = unitary_spec_from_json(json::parse(to_json(s).dump()));
		CHECK(th::dist(build_unitary(again).matrix(), u.matrix()) == 0.0);
	}
}

TEST_CASE("specs build the zoo members")
{
	const auto u = build_unitary(unitary_spec_from_json({{"kind", "nd-even"}, {"n", 6}, {"lambda", 0.9}}));
	CHECK(th::dist(u.matrix(), zoo::und_even(6, 0.9).matrix()) == 0.0);
	const json swap = {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
	const json circ = {{"n", 2}, {"layers", {{{"parity", "odd"}, {"gate", {{"source", "fixed"}, {"matrix", swap}}}}}}};
	const auto f = build_unitary(unitary_spec_from_json({{"kind", "brickwork"}, {"circuit", circ}}));
	CHECK(std::abs(f.matrix()(1, 2) - 1.0) == 0.0);
	CHECK(std::abs(f.matrix()(1, 1)) == 0.0);
}

TEST_CASE("malformed specs")
{
	CHECK_THROWS_AS(unitary_spec_from_json(json::array()), SpecParseError);
	CHECK_THROWS_AS(unitary_spec_from_json({{"kind", "toffoli"}, {"n", 3}}), SpecParseError);
	CHECK_THROWS_AS(unitary_spec_from_json({{"kind", "nd-even"}, {"n", 4}}), SpecParseError);
	CHECK_THROWS_AS(unitary_spec_from_json({{"kind", "nd-even"}, {"n", "four"}, {"lambda", 1}}), SpecParseError);
	CHECK_THROWS_AS(unitary_spec_from_json({{"kind", "nd-odd"}, {"n", 3}, {"lambda", 1}, {"inner", "x"}}),
	                SpecParseError);
	CHECK_THROWS_AS(unitary_spec_from_json({{"kind", "nd-odd"}, {"n", 3}, {"lambda", 1}, {"omega", "tau"}}),
	                SpecParseError);
	CHECK_THROWS_AS(circuit_from_json({{"n", 3}, {"layers", {{{"parity", "diagonal"}, {"gate", {}}}}}}),
	                SpecParseError);

	// parses, but the cube-root basis is not unitary
	const auto cube =
		unitary_spec_from_json({{"kind", "nd-odd"}, {"n", 3}, {"lambda", 1}, {"omega", "cube-root"}});
	CHECK_THROWS_AS(build_unitary(cube), InvariantError);
}

} // TEST_SUITE
