#pragma once

#include <cmath>

#include "entpower/random.hpp"
#include "entpower/tensor.hpp"
#include "entpower/types.hpp"

namespace th
{

using namespace entpower;

inline PureState random_state(int n, Rng& rng)
{
	Vector v(std::ptrdiff_t{1} << n);
	for(auto& a : v)
		a = Complex{rng.normal(), rng.normal()};
	v.normalize();
	return PureState(n, v);
}

inline Matrix random_single_qubit_unitary(Rng& rng)
{
	// Euler angles; enough to exercise local-unitary invariance.
	const double a = rng.uniform(0, 2 * kPi), b = rng.uniform(0, kPi), c = rng.uniform(0, 2 * kPi);
	Matrix u(2, 2);
	u << std::polar(1.0, -(a + c) / 2) * std::cos(b / 2), -std::polar(1.0, -(a - c) / 2) * std::sin(b / 2),
		std::polar(1.0, (a - c) / 2) * std::sin(b / 2), std::polar(1.0, (a + c) / 2) * std::cos(b / 2);
	return u;
}

inline double dist(const Matrix& a, const Matrix& b) { return tensor::frobenius_distance(a, b); }

inline double max_abs_diff(const Vector& a, const Vector& b) { return (a - b).cwiseAbs().maxCoeff(); }

} // namespace th
