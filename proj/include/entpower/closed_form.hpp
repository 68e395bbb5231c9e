#pragma once

// Analytic results for U = diag(1, ..., 1, e^{i phi}) on three qubits with
// real product inputs (all xi = 0). Used as oracles for the numeric pipeline.

#include <array>
#include <complex>

namespace entpower::closed_form
{

/// Single-qubit reduced state [[a, b], [conj(b), c]].
struct Rho3Entries
{
	int site = 1;
	double a = 1.0;
	std::complex<double> b{};
	double c = 0.0;
};

/// Entries of the reduced state of qubit `site` (1..3) of U|psi(theta)>.
Rho3Entries rho3_entries(int site, const std::array<double, 3>& theta, double phi);

/// Trigonometric polynomial A(theta, phi) such that the reduced eigenvalues
/// for equal angles are 1/2 +- sqrt(A)/32.
double a_expr3(double theta, double phi);

struct Eigenpair
{
	double plus = 1.0;
	double minus = 0.0;
};

using AExpr = double (*)(double theta, double phi);

/// (lambda_+, lambda_-) for theta_1 = theta_2 = theta_3 = theta. Throws if A
/// is below -1e-10; tiny negatives are clamped to zero.
Eigenpair eigvals3(double theta, double phi, AExpr a = a_expr3);

/// Residuals 1 + cos t_{i+1} + cos t_{i+2} - cos t_{i+1} cos t_{i+2}, i cyclic.
std::array<double, 3> stationarity_residuals(const std::array<double, 3>& theta);

/// True iff all three residuals vanish within `tol`.
bool stationarity_check(const std::array<double, 3>& theta, double tol = 1e-8);

/// -1/2 sin^2 t_i sin^2 t_{i+1} sin^4(t_{i+2}/2) sin^2(phi/2), i cyclic.
std::array<double, 3> second_derivative_terms(const std::array<double, 3>& theta, double phi);

struct ClosedFormMax
{
	double theta = 0.0;
	double value = 0.0; // 1/2 - sqrt(A)/32 at theta
};

/// max over theta in [0, pi] of 1/2 - sqrt(A(theta, phi))/32: dense grid of
/// `grid` points followed by golden-section refinement around the best node.
ClosedFormMax maximize3(double phi, int grid = 10000, AExpr a = a_expr3);

} // namespace entpower::closed_form
