#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace entpower
{

/// Name recorded in run manifests. Bump the suffix whenever the mapping from
/// seed to sample stream changes.
inline constexpr std::string_view kPrngName = "mt19937_64/splitmix-derive/box-muller/v1";

/// Child seed for the `index`-th independent stream under `seed`
/// (SplitMix64 finalizer over the pair).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Seeded generator with platform-independent uniform and normal draws.
/// (std::normal_distribution is implementation-defined, so it is not used.)
class Rng
{
public:
	explicit Rng(std::uint64_t seed) : engine_{seed} {}

	/// Uniform in [0, 1) with 53 random bits.
	double uniform();
	double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
	/// Standard normal via Box-Muller.
	double normal();

private:
	std::mt19937_64 engine_;
	double spare_ = 0.0;
	bool has_spare_ = false;
};

} // namespace entpower
