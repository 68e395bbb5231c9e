#pragma once

// Self-test: closed-form and oracle cross-checks that a fresh build must pass.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "entpower/closed_form.hpp"

namespace entpower::verify
{

struct SuiteReport
{
	std::string name;
	int checks = 0;
	int failures = 0;
	std::string first_failure; // empty when everything passed
};

struct Report
{
	std::vector<SuiteReport> suites;

	[[nodiscard]] bool passed() const;
};

nlohmann::json to_json(const Report& r);

struct Options
{
	/// A-expression under test; swap in a broken one to see the suite catch it.
	closed_form::AExpr a_expr = closed_form::a_expr3;
	std::uint64_t seed = 20240917;
	int samples = 1000; // random draws per statistical suite
};

Report run_all(const Options& opts = {});

} // namespace entpower::verify
