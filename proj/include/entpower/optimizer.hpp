#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "entpower/types.hpp"

namespace entpower::opt
{

/// Fully separable input: qubit q is cos(theta_q/2)|0> + e^{i xi_q} sin(theta_q/2)|1>,
/// with theta in [0, pi] and xi in [0, 2 pi).
struct FSPoint
{
	std::vector<double> thetas;
	std::vector<double> xis;

	[[nodiscard]] int num_qubits() const { return static_cast<int>(thetas.size()); }
};

PureState to_state(const FSPoint& p);

/// Map arbitrary real angles into the canonical box. The represented state
/// changes at most by a global phase.
FSPoint canonicalize(FSPoint p);

/// Symmetry-reduced parameterizations of the fully separable manifold.
enum class Ansatz
{
	Full,      // theta_q, xi_q for every qubit
	NoPhases,  // theta_q, all xi = 0
	Symmetric, // one shared theta
	OddEven,   // theta on odd sites, theta' on even sites
	EdgeBulk,  // sites 1 and N share theta, bulk sites free
};

std::string to_string(Ansatz a);
Ansatz ansatz_from_string(const std::string& s);

std::size_t parameter_count(Ansatz a, int num_qubits);

/// Expand reduced parameters into a full FSPoint. Phase-free ansaetze fold
/// their angles into [0, pi]; Full is left uncanonicalized.
FSPoint expand(Ansatz a, std::span<const double> params, int num_qubits);

struct OptimizerConfig
{
	int restarts = 32;
	int max_evals = 5000; // per local run
	double ftol = 1e-9;
	double xtol = 1e-8;
	std::uint64_t seed = 0x5eed;
	/// Empty: pick automatically (reduced ansaetze, then NoPhases for diagonal
	/// unitaries or Full otherwise).
	std::vector<Ansatz> ansatze;

	void validate() const;
};

nlohmann::json to_json(const OptimizerConfig& c);
OptimizerConfig optimizer_config_from_json(const nlohmann::json& j);

struct PowerResult
{
	double value = 0.0;
	FSPoint argmax;
	Ansatz ansatz_used = Ansatz::Full;
	long long evaluations = 0;
	int restarts = 0;
	bool converged = false;
};

nlohmann::json to_json(const PowerResult& r);

/// Max GGM of U|psi> over fully separable |psi> (best found over all
/// configured ansaetze and restarts). Deterministic in (U, cfg).
PowerResult entangling_power(const UnitaryMatrix& u, const OptimizerConfig& cfg = {});

/// Entangling power of U^dagger.
PowerResult disentangling_power(const UnitaryMatrix& u, const OptimizerConfig& cfg = {});

/// |E(U) - D(U)| under identical configuration.
double power_gap(const UnitaryMatrix& u, const OptimizerConfig& cfg = {});

/// Exhaustive search on a regular grid: theta_k = pi k / (grid - 1) and, when
/// `include_phases`, xi_k = 2 pi k / grid. Lower bound on the true power.
/// Throws if the grid has more than 1e8 points.
double brute_force_power(const UnitaryMatrix& u, int grid_per_angle, bool include_phases);

/// GGM of U applied to the product state at `p`.
double ggm_at(const UnitaryMatrix& u, const FSPoint& p);

} // namespace entpower::opt
