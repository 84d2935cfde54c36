#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "dilute1d/potential.hpp"

namespace dilute1d {

enum class Boundary { Neumann, Dirichlet };
enum class Statistics { Bose, Fermi };

const char* to_string(Boundary b);
const char* to_string(Statistics s);
Boundary parse_boundary(const std::string& text);

/// N <= 3 particles in [0, L] with pair interaction `potential`.
/// `cells` is the number of grid cells per dimension on the finest grid.
struct OracleProblem {
    int particles = 1;
    double length = 1.0;
    Boundary boundary = Boundary::Dirichlet;
    Potential potential;
    Statistics statistics = Statistics::Bose;
    int cells = 256;
};

/// Finite-difference Hamiltonian restricted to the symmetry sector.
///
/// Dirichlet uses the interior nodes x_i = i h (i = 1..cells-1); Neumann uses
/// cell centres x_i = (i + 1/2) h with mirrored ghosts. Pair separations are
/// multiples of h on both grids, so contact interactions sit on lattice sites.
/// Bose states live on sorted index tuples with orbit-weighted stencils; the
/// Fermi sector is the same lattice with every coincident tuple removed.
struct GridHamiltonian {
    Eigen::SparseMatrix<double> matrix;
    double spacing = 0.0;
    int cells = 0;
    int nodes_per_dimension = 0;
    std::vector<std::array<int, 3>> sites;  // sorted node indices; unused slots are -1
};

GridHamiltonian build_hamiltonian(const OracleProblem& p, int cells);
inline GridHamiltonian build_hamiltonian(const OracleProblem& p) { return build_hamiltonian(p, p.cells); }

struct GridEnergy {
    int cells = 0;
    double spacing = 0.0;
    std::size_t sites = 0;
    std::array<double, 3> lowest{};  // lowest eigenvalues, ascending (NaN if fewer exist)
    int iterations = 0;               // Lanczos operator applications
    double residual = 0.0;            // |H v - E v| / max(1, |E|) for the ground state
};

struct SpectralResult {
    std::vector<GridEnergy> grids;   // coarse to fine
    double extrapolated = 0.0;
    double error = 0.0;              // |finest - extrapolated|
    double order = 2.0;              // detected convergence order in h
    Eigen::VectorXd ground_state;    // finest grid, filled on request
};

/// Ground energy on grids with cells / 2^j cells, j = refinements-1 .. 0,
/// then Richardson extrapolation with an order detected from the last three
/// grids (clamped to [1, 4], 2 when the differences are not monotone).
SpectralResult ground_energy(const OracleProblem& p, int refinements, bool keep_vector = false);

struct RobinsonCheck {
    double lhs_dirichlet = 0.0;  // E^D(n, l + 2b)
    double rhs_neumann = 0.0;    // E^N(n, l)
    double slack = 0.0;          // 2n / b^2
    double error = 0.0;          // combined extrapolation error
    bool holds = false;
};

/// E^D(n, l + 2b) <= E^N(n, l) + 2n/b^2 (+ oracle error). The potential must
/// be symmetric decreasing: contact deltas, contact hard cores and
/// non-increasing steps.
RobinsonCheck robinson_check(int n, double ell, double b, const Potential& p, int cells = 256, int refinements = 3);

}  // namespace dilute1d
