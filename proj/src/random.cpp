#include "entpower/random.hpp"

#include <cmath>

namespace entpower
{

namespace
{

std::uint64_t splitmix64(std::uint64_t x)
{
	x += 0x9E3779B97F4A7C15ULL;
	x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
	x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
	return x ^ (x >> 31);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
	return splitmix64(splitmix64(seed) ^ (index * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
}

double Rng::uniform()
{
	return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal()
{
	if(has_spare_)
	{
		has_spare_ = false;
		return spare_;
	}
	double u1 = uniform();
	while(u1 <= 0.0)
		u1 = uniform();
	const double u2 = uniform();
	const double r = std::sqrt(-2.0 * std::log(u1));
	const double angle = 2.0 * 3.14159265358979323846 * u2;
	spare_ = r * std::sin(angle);
	has_spare_ = true;
	return r * std::cos(angle);
}

} // namespace entpower
