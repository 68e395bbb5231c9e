#include "entpower/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entpower/types.hpp"

namespace entpower::closed_form
{

Rho3Entries rho3_entries(int site, const std::array<double, 3>& theta, double phi)
{
	if(site < 1 || site > 3)
		throw std::out_of_range("rho3_entries: site must be 1, 2 or 3");
	const int i = site - 1;
	// j is the first other site, k the remaining one.
	const int j = (i == 0) ? 1 : 0;
	const int k = 3 - i - j;

	auto c2 = [&](int q) { return std::pow(std::cos(0.5 * theta[q]), 2); };
	auto s2 = [&](int q) { return std::pow(std::sin(0.5 * theta[q]), 2); };

	const std::complex<double> r1 = c2(k) + std::polar(1.0, -phi) * s2(k);
	Rho3Entries e;
	e.site = site;
	e.a = c2(i);
	e.c = s2(i);
	e.b = std::cos(0.5 * theta[i]) * std::sin(0.5 * theta[i]) * (c2(j) + r1 * s2(j));
	return e;
}

double a_expr3(double t, double phi)
{
	const double ch = std::cos(0.5 * t);
	const double sh = std::sin(0.5 * t);
	return 218.0 + 16.0 * std::cos(t) + 49.0 * std::cos(2 * t) - 24.0 * std::cos(3 * t) - 10.0 * std::cos(4 * t) +
	       8.0 * std::cos(5 * t) - std::cos(6 * t) -
	       1024.0 * std::pow(ch, 4) * (-3.0 + std::cos(t)) * std::cos(phi) * std::pow(sh, 6);
}

Eigenpair eigvals3(double theta, double phi, AExpr a)
{
	double av = a(theta, phi);
	if(av < -1e-10)
		throw std::domain_error("eigvals3: A is negative");
	av = std::max(av, 0.0);
	const double half_gap = std::sqrt(av) / 32.0;
	return {0.5 + half_gap, 0.5 - half_gap};
}

std::array<double, 3> stationarity_residuals(const std::array<double, 3>& theta)
{
	std::array<double, 3> r{};
	for(int i = 0; i < 3; ++i)
	{
		const double x = std::cos(theta[(i + 1) % 3]);
		const double y = std::cos(theta[(i + 2) % 3]);
		r[i] = 1.0 + x + y - x * y;
	}
	return r;
}

bool stationarity_check(const std::array<double, 3>& theta, double tol)
{
	const auto r = stationarity_residuals(theta);
	return std::all_of(r.begin(), r.end(), [&](double v) { return std::abs(v) <= tol; });
}

std::array<double, 3> second_derivative_terms(const std::array<double, 3>& theta, double phi)
{
	std::array<double, 3> out{};
	for(int i = 0; i < 3; ++i)
	{
		const double a = std::sin(theta[i]);
		const double b = std::sin(theta[(i + 1) % 3]);
		const double c = std::sin(0.5 * theta[(i + 2) % 3]);
		const double p = std::sin(0.5 * phi);
		out[i] = -0.5 * a * a * b * b * std::pow(c, 4) * p * p;
	}
	return out;
}

ClosedFormMax maximize3(double phi, int grid, AExpr a)
{
	if(grid < 3)
		throw std::invalid_argument("maximize3: grid too small");
	auto g = [&](double t) { return 0.5 - std::sqrt(std::max(0.0, a(t, phi))) / 32.0; };

	int best = 0;
	double best_v = g(0.0);
	const double h = kPi / (grid - 1);
	for(int k = 1; k < grid; ++k)
	{
		const double v = g(k * h);
		if(v > best_v)
		{
			best_v = v;
			best = k;
		}
	}

	double lo = std::max(0.0, (best - 1) * h);
	double hi = std::min(kPi, (best + 1) * h);
	const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
	double x1 = hi - ratio * (hi - lo);
	double x2 = lo + ratio * (hi - lo);
	double f1 = g(x1), f2 = g(x2);
	for(int it = 0; it < 100 && hi - lo > 1e-13; ++it)
	{
		if(f1 < f2)
		{
			lo = x1;
			x1 = x2;
			f1 = f2;
			x2 = lo + ratio * (hi - lo);
			f2 = g(x2);
		}
		else
		{
			hi = x2;
			x2 = x1;
			f2 = f1;
			x1 = hi - ratio * (hi - lo);
			f1 = g(x1);
		}
	}
	const double t = 0.5 * (lo + hi);
	const double v = g(t);
	if(v >= best_v)
		return {t, v};
	return {best * h, best_v};
}

} // namespace entpower::closed_form
