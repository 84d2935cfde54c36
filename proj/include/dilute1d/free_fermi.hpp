#pragma once

#include <array>
#include <span>
#include <vector>

namespace dilute1d {

/// N free spinless fermions in [0, L] with Dirichlet walls.
class FermiEnsemble {
public:
    FermiEnsemble(int n, double length);

    int particles() const noexcept { return n_; }
    double length() const noexcept { return length_; }
    double density() const noexcept { return n_ / length_; }

private:
    int n_;
    double length_;
};

/// sum_{j=1}^{N} (pi j / L)^2.
double dirichlet_energy(const FermiEnsemble& e);

/// Dirichlet kernel D_n(t) = sin((n + 1/2) t) / (2 pi sin(t/2)), with the
/// removable singularities at t in 2 pi Z handled by a 4th-order series.
double dirichlet_kernel(int n, double t);

struct SignedLog {
    double log_abs = 0.0;
    int sign = 0;  // 0 when the value is exactly zero
};

/// Closed product form of the ground state,
///   4^{N(N-1)/2} (2/L)^{N/2} prod_k sin(pi x_k / L)
///     prod_{i<j} sin(pi (x_j - x_i) / 2L) sin(pi (x_i + x_j) / 2L),
/// positive on 0 < x_1 < ... < x_N < L. It equals det[phi_j(x_{N+1-i})] with
/// phi_j(x) = sqrt(2/L) sin(pi j x / L). Switches to log accumulation for N > 20.
double psi_F(const FermiEnsemble& e, std::span<const double> x);
SignedLog psi_F_log(const FermiEnsemble& e, std::span<const double> x);

/// psi_F and its gradient by the product rule (no division by factors, so
/// it stays finite on nodal sets). Returns the value; grad has size N.
double psi_F_gradient(const FermiEnsemble& e, std::span<const double> x, std::span<double> grad);

/// psi_F / (x_j - x_i) for i < j, with the vanishing pair factor replaced by
/// its sinc form so the value is finite and exact at x_i == x_j. grad may be
/// empty; otherwise it receives the gradient of the reduced function.
double psi_F_pair_reduced(const FermiEnsemble& e, std::span<const double> x, int i, int j, std::span<double> grad);

/// One-body density matrix in Dirichlet-kernel form.
double gamma1(const FermiEnsemble& e, double x, double y);
double rho1(const FermiEnsemble& e, double x);

/// Two-body density rho1(x1) rho1(x2) - gamma1(x1, x2)^2.
double rho2(const FermiEnsemble& e, double x1, double x2);

/// Three-body density: 3x3 Wick determinant of gamma1.
double rho3(const FermiEnsemble& e, double x1, double x2, double x3);

/// Fits rho2(x0 + s/2, x0 - s/2) / s^2 = C + D s^2 on `samples` log-spaced
/// separations in [s_min, s_max] and returns C.
double near_diagonal_coefficient(const FermiEnsemble& e, double x0, double s_min, double s_max,
                                 int samples = 24);

struct Rho3Report {
    double max_ratio = 0.0;          // max rho3 / (rho^9 prod d^2) over separated triples
    double max_coincident = 0.0;     // max |rho3| over triples with a coincident pair
    int separated = 0;
    int coincident = 0;
};

Rho3Report rho3_scaling_check(const FermiEnsemble& e, std::span<const std::array<double, 3>> triples);

/// Exact Dirichlet energy of N hard rods of the given diameter in [0, L]:
/// the free Fermi energy on the shortened box L - (N-1) diameter.
double hardcore_exact_energy(int n, double length, double diameter);

}  // namespace dilute1d
