#pragma once

// Reference computations used only by tests and the acceptance suite. None
// of these share code with the library routine they check.

#include <span>

#include "dilute1d/lieb_liniger.hpp"
#include "dilute1d/scattering.hpp"

namespace dilute1d::oracle {

/// det[ sqrt(2/L) sin(pi j x_i / L) ], i, j = 1..N, by pivoted elimination
/// in 50-digit arithmetic, rounded to double.
double slater_determinant(int n, double length, std::span<const double> x);

/// (2/L) sum_j sin(pi j x / L) sin(pi j y / L) and its mixed derivatives
/// d^{k1}/dx^{k1} d^{k2}/dy^{k2}, summed term by term.
double gamma1_sine_sum(int n, double length, double x, double y, int kx = 0, int ky = 0);

/// Scattering length of a square barrier of height h on |x| < R:
/// R - coth(k R) / k with k = sqrt(h / 2).
double square_barrier_length(double height, double radius);

/// int 2|f'|^2 + v |f|^2 over [-R, R] by adaptive Gauss-Kronrod on each
/// segment plus the delta spikes, using only value() and slope().
double scattering_functional(const ScatteringResult& r);

/// Ground state of two bosons with 2c delta contact in a hard-wall box,
/// from the open-boundary Bethe equations
///   k_j L = pi n_j - sum_{l != j} [atan((k_j - k_l)/c) + atan((k_j + k_l)/c)],
/// n = (1, 2), solved by damped Newton. Returns k_1^2 + k_2^2.
double two_body_box_energy(double c, double length);

/// Residual of 2 pi g(y) = 1 + int K(x, y) g(x) dx at an off-node y, with
/// the integral done adaptively on the Nystrom interpolant.
double ll_equation_residual(const LLGroundState& s, double y);

}  // namespace dilute1d::oracle
