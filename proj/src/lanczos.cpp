#include "dilute1d/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "dilute1d/errors.hpp"

namespace dilute1d {

namespace {

// Two passes of classical Gram-Schmidt against the stored basis.
void orthogonalise(const std::vector<Eigen::VectorXd>& basis, Eigen::VectorXd& w) {
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& q : basis) w -= q.dot(w) * q;
}

// Cheap test on the tridiagonal matrix alone: are the leading Ritz pairs converged?
bool ritz_converged(const std::vector<double>& alpha, const std::vector<double>& beta, double last_beta, int wanted,
                    double tolerance) {
    const int m = static_cast<int>(alpha.size());
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) T(i, i) = alpha[static_cast<std::size_t>(i)];
    for (int i = 0; i + 1 < m; ++i) T(i, i + 1) = T(i + 1, i) = beta[static_cast<std::size_t>(i)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    for (int r = 0; r < std::min(wanted, m); ++r) {
        const int col = m - 1 - r;
        const double theta = es.eigenvalues()(col);
        if (std::abs(last_beta * es.eigenvectors()(m - 1, col)) > tolerance * std::abs(theta)) return false;
    }
    return true;
}

}  // namespace

LanczosResult lanczos_largest(const LinearOperator& op, Eigen::Index dimension, const LanczosOptions& options) {
    if (dimension < 1) throw InvalidParameter("Lanczos: empty operator");
    if (options.wanted < 1) throw InvalidParameter("Lanczos: need at least one eigenpair");
    const int wanted = static_cast<int>(std::min<Eigen::Index>(options.wanted, dimension));
    const int max_basis = static_cast<int>(std::min<Eigen::Index>(std::max(options.max_basis, wanted + 2), dimension));

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    Eigen::VectorXd start(dimension);
    for (Eigen::Index i = 0; i < dimension; ++i) start(i) = uni(rng);
    start.normalize();

    LanczosResult out;
    double worst = 0.0;
    for (int restart = 0; restart <= options.max_restarts; ++restart) {
        std::vector<Eigen::VectorXd> basis;
        basis.reserve(static_cast<std::size_t>(max_basis));
        std::vector<double> alpha, beta;
        basis.push_back(start);
        Eigen::VectorXd w(dimension);
        double last_beta = 0.0;
        bool invariant = false;
        for (int j = 0; j < max_basis; ++j) {
            op(basis.back(), w);
            ++out.iterations;
            alpha.push_back(basis.back().dot(w));
            orthogonalise(basis, w);
            last_beta = w.norm();
            if (j + 1 == max_basis) break;
            if (last_beta <= 1e-14 * std::abs(alpha.back())) {
                invariant = true;
                break;
            }
            if ((j + 1) % 10 == 0 && j + 1 >= 2 * wanted && ritz_converged(alpha, beta, last_beta, wanted, options.tolerance))
                break;
            beta.push_back(last_beta);
            basis.push_back(w / last_beta);
        }

        const int m = static_cast<int>(alpha.size());
        Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) T(i, i) = alpha[static_cast<std::size_t>(i)];
        for (int i = 0; i + 1 < m; ++i) T(i, i + 1) = T(i + 1, i) = beta[static_cast<std::size_t>(i)];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
        const int take = std::min(wanted, m);

        out.values.clear();
        out.vectors.clear();
        out.residuals.clear();
        worst = 0.0;
        for (int r = 0; r < take; ++r) {
            const int col = m - 1 - r;  // eigenvalues ascend
            const double theta = es.eigenvalues()(col);
            const Eigen::VectorXd s = es.eigenvectors().col(col);
            Eigen::VectorXd v = Eigen::VectorXd::Zero(dimension);
            for (int i = 0; i < m; ++i) v += s(i) * basis[static_cast<std::size_t>(i)];
            v.normalize();
            const double res = invariant ? 0.0 : std::abs(last_beta * s(m - 1)) / std::max(std::abs(theta), 1e-300);
            out.values.push_back(theta);
            out.vectors.push_back(std::move(v));
            out.residuals.push_back(res);
            worst = std::max(worst, res);
        }
        if (worst <= options.tolerance || invariant || m == dimension) {
            out.converged = true;
            return out;
        }
        start = Eigen::VectorXd::Zero(dimension);
        for (const auto& v : out.vectors) start += v;
        start.normalize();
    }
    std::ostringstream msg;
    msg << "Lanczos did not converge after " << options.max_restarts << " restarts; worst residual " << worst;
    throw ConvergenceError(msg.str());
}

}  // namespace dilute1d
