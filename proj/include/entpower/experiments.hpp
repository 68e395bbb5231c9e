#pragma once

// Sweeps, scatters and circuit studies driven by a JSON run config. A config
// fully determines the rows it produces, so any CSV can be regenerated from
// the manifest written next to it.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "entpower/optimizer.hpp"
#include "entpower/unitary_spec.hpp"

namespace entpower::exp
{

inline constexpr const char* kToolVersion = "1.0.0";

/// Raised when a requested register exceeds the configured qubit cap.
struct DimensionCapError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

struct SweepPoint
{
	UnitarySpec spec;
	std::string var; // "lambda", "t", "sample", "phi", "none"
	double value = 0.0;
	std::uint64_t seed = 0; // seed of the unitary if it has one, else the optimizer seed
};

struct SweepRecord
{
	SweepPoint point;
	opt::PowerResult e;
	opt::PowerResult d;
	double gap = 0.0;
	double wall_ms = 0.0;
};

nlohmann::json to_json(const SweepRecord& r);

/// Column order is part of the file format; do not reorder.
std::string csv_header();
std::string csv_row(const SweepRecord& r);
void write_csv(std::ostream& os, const std::vector<SweepRecord>& rows);

/// E, D and |E - D| for one point. wall_ms stays 0 unless `timing`.
SweepRecord evaluate(const SweepPoint& p, opt::OptimizerConfig cfg, bool timing = false);

/// lambda_k = 2 pi k / (points - 1), k = 0..points-1.
std::vector<double> lambda_grid(int points = 97);
/// t_k = pi k / (points - 1).
std::vector<double> time_grid(int points = 65);

/// Expand a run config into its points. Recognized "command" values:
/// power, scan-lambda, scan-time, random-scatter, circuit.
std::vector<SweepPoint> plan(const nlohmann::json& config);

/// Points are evaluated in parallel (one point per thread); rows come back in
/// input order.
std::vector<SweepRecord> run_points(const std::vector<SweepPoint>& points, const opt::OptimizerConfig& cfg,
                                    bool timing = false);

/// plan + run_points using the "optimizer" and "timing" entries of `config`.
std::vector<SweepRecord> run_config(const nlohmann::json& config);

/// Two-layer (or `depth`-layer) brickwork used by circuit studies.
/// mode: "same" (one HaarShared draw for every layer), "distinct" (HaarShared
/// with a fresh seed per layer), "per-bond" (HaarPerBond, fresh seed per layer).
brickwork::CircuitSpec circuit_preset(int n, const std::string& mode, std::uint64_t seed, int depth = 2);

struct RunManifest
{
	std::string tool_version = kToolVersion;
	std::string config_hash;
	std::string prng;
	std::string started;
	std::string finished;
	std::string host;
	nlohmann::json config;
	std::string output;
};

nlohmann::json to_json(const RunManifest& m);
RunManifest manifest_from_json(const nlohmann::json& j);

/// FNV-1a 64 of the compact JSON dump, as 16 hex digits.
std::string config_hash(const nlohmann::json& config);

/// Manifest for `config` with timestamps and host filled in.
RunManifest make_manifest(const nlohmann::json& config, const std::string& output, const std::string& started);

std::string utc_now();

/// Throws DimensionCapError if `n` exceeds the cap stored in `config`
/// ("max_qubits", default 12).
void check_cap(int n, const nlohmann::json& config);

} // namespace entpower::exp
