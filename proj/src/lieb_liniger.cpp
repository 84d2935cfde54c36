#include "dilute1d/lieb_liniger.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <boost/math/tools/toms748_solve.hpp>

#include "dilute1d/errors.hpp"
#include "dilute1d/quadrature.hpp"

namespace dilute1d {

namespace {

constexpr double kPi = std::numbers::pi;

double kernel(double lambda, double x, double y) {
    const double d = x - y;
    return 2.0 * lambda / (lambda * lambda + d * d);
}

// Exact integral of the kernel over x in [-1, 1].
double kernel_integral(double lambda, double y) {
    return 2.0 * (std::atan((1.0 - y) / lambda) + std::atan((1.0 + y) / lambda));
}

}  // namespace

LLGroundState solve_at_lambda(double lambda, int n_nodes) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidParameter("lambda must be > 0");
    if (n_nodes < 8) throw InvalidParameter("need at least 8 quadrature nodes");

    const GaussRule rule = gauss_legendre(n_nodes);
    const auto n = static_cast<Eigen::Index>(n_nodes);
    Eigen::MatrixXd A(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double y = rule.nodes[static_cast<std::size_t>(i)];
        double offdiag = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (j == i) continue;
            const double wk = rule.weights[static_cast<std::size_t>(j)] *
                              kernel(lambda, rule.nodes[static_cast<std::size_t>(j)], y);
            A(i, j) = -wk;
            offdiag += wk;
        }
        // int K(x,y) (g(x) - g(y)) dx + g(y) int K(x,y) dx; the j == i term vanishes.
        A(i, i) = 2.0 * kPi - kernel_integral(lambda, y) + offdiag;
    }
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    Eigen::VectorXd g = lu.solve(Eigen::VectorXd::Ones(n));
    if (!g.allFinite()) throw InternalError("Nystrom system is singular");

    LLGroundState s;
    s.lambda = lambda;
    s.n_nodes = n_nodes;
    s.nodes = rule.nodes;
    s.weights = rule.weights;
    s.g.assign(g.data(), g.data() + n);
    double m0 = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < s.g.size(); ++i) {
        m0 += s.weights[i] * s.g[i];
        m2 += s.weights[i] * s.g[i] * s.nodes[i] * s.nodes[i];
    }
    s.g_integral = m0;
    s.gamma = lambda / m0;
    const double ratio = s.gamma / lambda;
    s.e = ratio * ratio * ratio * m2;
    s.ill_conditioned = s.gamma < 1e-3;
    return s;
}

LLGroundState e_of_gamma(double gamma, int n_nodes, double tol) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw InvalidParameter("gamma must be > 0");

    auto residual = [&](double log_lambda) {
        return solve_at_lambda(std::exp(log_lambda), n_nodes).gamma / gamma - 1.0;
    };
    double lo = std::log(gamma / 10.0), hi = std::log(10.0 * gamma + 10.0);
    double f_lo = residual(lo), f_hi = residual(hi);
    for (int i = 0; f_lo > 0.0; ++i) {
        if (i > 60) throw InternalError("could not bracket lambda from below");
        hi = lo;
        f_hi = f_lo;
        lo -= std::log(10.0);
        f_lo = residual(lo);
    }
    for (int i = 0; f_hi < 0.0; ++i) {
        if (i > 60) throw InternalError("could not bracket lambda from above");
        lo = hi;
        f_lo = f_hi;
        hi += std::log(10.0);
        f_hi = residual(hi);
    }
    if (f_lo == 0.0) return solve_at_lambda(std::exp(lo), n_nodes);
    if (f_hi == 0.0) return solve_at_lambda(std::exp(hi), n_nodes);

    std::uintmax_t max_iter = 200;
    auto [a, b] = boost::math::tools::toms748_solve(residual, lo, hi, f_lo, f_hi,
                                                    boost::math::tools::eps_tolerance<double>(52), max_iter);
    LLGroundState sa = solve_at_lambda(std::exp(a), n_nodes);
    LLGroundState sb = solve_at_lambda(std::exp(b), n_nodes);
    LLGroundState best = std::abs(sa.gamma - gamma) <= std::abs(sb.gamma - gamma) ? sa : sb;
    if (std::abs(best.gamma - gamma) > tol * gamma)
        throw InternalError("lambda inversion did not reach the requested tolerance");
    return best;
}

double interpolate_g(const LLGroundState& s, double y) {
    double num = 1.0, den = 2.0 * kPi - kernel_integral(s.lambda, y);
    for (std::size_t j = 0; j < s.g.size(); ++j) {
        const double wk = s.weights[j] * kernel(s.lambda, s.nodes[j], y);
        num += wk * s.g[j];
        den += wk;
    }
    return num / den;
}

double ll_lower_bound(double gamma) {
    const double r = gamma / (gamma + 2.0);
    return kPi * kPi / 3.0 * r * r;
}

double ll_expansion(double gamma) {
    const double r = 1.0 + 2.0 / gamma;
    return kPi * kPi / 3.0 / (r * r);
}

bool check_lower_bound(const LLGroundState& s) { return s.e >= ll_lower_bound(s.gamma) - 1e-9; }

double expansion_residual(const LLGroundState& s) {
    if (s.gamma < 5.0) throw OutOfRegime("expansion residual needs gamma >= 5");
    return s.gamma * s.gamma * s.gamma * std::abs(s.e - ll_expansion(s.gamma));
}

}  // namespace dilute1d
