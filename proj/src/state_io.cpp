#include "entpower/state_io.hpp"

#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "entpower/tensor.hpp"

namespace entpower::io
{

PureState read_amplitudes(std::istream& in, double norm_tol)
{
	std::vector<Complex> amps;
	std::string line;
	int lineno = 0;
	while(std::getline(in, line))
	{
		++lineno;
		const auto first = line.find_first_not_of(" \t\r");
		if(first == std::string::npos || line[first] == '#')
			continue;
		std::istringstream ls(line);
		double re = 0.0, im = 0.0;
		std::string extra;
		if(!(ls >> re >> im) || (ls >> extra))
			throw std::invalid_argument("amplitude file line " + std::to_string(lineno) + ": expected 're im'");
		amps.emplace_back(re, im);
	}
	if(amps.size() < 4 || (amps.size() & (amps.size() - 1)) != 0)
		throw DimensionError("amplitude file must hold 2^N values with N >= 2, got " + std::to_string(amps.size()));

	Vector v = Eigen::Map<Vector>(amps.data(), static_cast<Eigen::Index>(amps.size()));
	const double norm = v.norm();
	if(std::abs(norm - 1.0) > norm_tol)
		throw InvariantError("amplitudes are not normalized (norm " + std::to_string(norm) + ")");
	v /= norm;
	return PureState(std::move(v));
}

PureState named_state(const std::string& name, int n)
{
	if(name == "ghz")
		return tensor::ghz_state(n);
	if(name == "w")
		return tensor::w_state(n);
	if(name == "plus")
		return tensor::plus_state(n);
	if(name == "product")
		return tensor::basis_state(n, 0);
	throw std::invalid_argument("unknown named state '" + name + "' (ghz, w, plus, product)");
}

} // namespace entpower::io
