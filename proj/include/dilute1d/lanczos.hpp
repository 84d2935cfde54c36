#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Core>

namespace dilute1d {

struct LanczosOptions {
    int wanted = 3;            // number of extremal (largest) eigenpairs
    int max_basis = 80;        // Krylov dimension before an explicit restart
    int max_restarts = 30;
    double tolerance = 1e-12;  // residual relative to the Ritz value
    std::uint64_t seed = 0x5EED;
};

struct LanczosResult {
    std::vector<double> values;            // descending
    std::vector<Eigen::VectorXd> vectors;
    std::vector<double> residuals;         // |beta * s_last| / |theta|
    int iterations = 0;                    // operator applications
    bool converged = false;
};

using LinearOperator = std::function<void(const Eigen::VectorXd& in, Eigen::VectorXd& out)>;

/// Largest eigenpairs of a symmetric operator by Lanczos with full
/// reorthogonalisation and explicit restarts on the leading Ritz vectors.
/// The start vector is drawn from mt19937_64(seed), so results are
/// reproducible. Throws ConvergenceError if max_restarts is exhausted.
LanczosResult lanczos_largest(const LinearOperator& op, Eigen::Index dimension, const LanczosOptions& options = {});

}  // namespace dilute1d
