#pragma once

#include <vector>

namespace dilute1d {

/// Thermodynamic Lieb-Liniger ground state in dimensionless form. The energy
/// per particle is rho^2 * e(gamma) with gamma = c / rho; callers apply the
/// rho^2 scaling.
struct LLGroundState {
    double gamma = 0.0;
    double lambda = 0.0;
    std::vector<double> nodes;    // Gauss-Legendre nodes on [-1, 1]
    std::vector<double> weights;
    std::vector<double> g;        // quasi-momentum density at the nodes
    double g_integral = 0.0;      // int_{-1}^{1} g
    double e = 0.0;
    int n_nodes = 0;
    bool ill_conditioned = false; // gamma < 1e-3: sharp kernel, trust less
};

constexpr int kDefaultLLNodes = 200;

/// Nystrom solve of 2 pi g(y) = 1 + 2 lambda int g(x) / (lambda^2 + (x-y)^2)
/// on Gauss-Legendre nodes with the kernel's diagonal singularity subtracted,
/// then gamma = lambda / int g and e = (gamma/lambda)^3 int g x^2.
LLGroundState solve_at_lambda(double lambda, int n_nodes = kDefaultLLNodes);

/// Finds lambda with gamma(lambda) = gamma to relative tolerance `tol`.
/// The returned state's `gamma` is the one actually reached.
LLGroundState e_of_gamma(double gamma, int n_nodes = kDefaultLLNodes, double tol = 1e-13);

/// Nystrom interpolant of g at an arbitrary y in [-1, 1].
double interpolate_g(const LLGroundState& s, double y);

/// pi^2/3 (gamma/(gamma+2))^2.
double ll_lower_bound(double gamma);

/// pi^2/3 (1 + 2/gamma)^-2, the large-gamma expansion through second order.
double ll_expansion(double gamma);

/// e >= lower bound - 1e-9.
bool check_lower_bound(const LLGroundState& s);

/// gamma^3 |e - ll_expansion(gamma)|. Throws OutOfRegime for gamma < 5.
double expansion_residual(const LLGroundState& s);

}  // namespace dilute1d
