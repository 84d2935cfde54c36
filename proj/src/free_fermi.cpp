#include "dilute1d/free_fermi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "dilute1d/errors.hpp"

namespace dilute1d {

namespace {

constexpr double kPi = std::numbers::pi;

// Below this |t| (after reduction mod 2 pi) the kernel uses its Taylor series.
constexpr double kSeriesCutoff = kPi * 1e-8;

// Dirichlet kernel at (pi / L) * u, with u reduced to [-L, L] before scaling
// so that arguments near 2 pi keep full relative precision.
double kernel_of_offset(int n, double u, double length) {
    if (u > length) u -= 2.0 * length;
    return dirichlet_kernel(n, kPi * u / length);
}

}  // namespace

FermiEnsemble::FermiEnsemble(int n, double length) : n_(n), length_(length) {
    if (n < 1) throw InvalidParameter("need at least one particle");
    if (!(length > 0.0) || !std::isfinite(length)) throw InvalidParameter("box length must be > 0");
}

double dirichlet_energy(const FermiEnsemble& e) {
    const double n = e.particles();
    const double k = kPi / e.length();
    return k * k * n * (n + 1.0) * (2.0 * n + 1.0) / 6.0;
}

double dirichlet_kernel(int n, double t) {
    // Reduce to (-pi, pi]; the kernel is 2 pi periodic.
    double s = std::remainder(t, 2.0 * kPi);
    if (std::abs(s) < kSeriesCutoff) {
        const double nn = n;
        const double s2 = nn * (nn + 1.0) * (2.0 * nn + 1.0) / 3.0;
        const double s4 = nn * (nn + 1.0) * (2.0 * nn + 1.0) * (3.0 * nn * nn + 3.0 * nn - 1.0) / 15.0;
        return ((2.0 * nn + 1.0) - s2 * s * s / 2.0 + s4 * s * s * s * s / 24.0) / (2.0 * kPi);
    }
    return std::sin((n + 0.5) * s) / (2.0 * kPi * std::sin(0.5 * s));
}

SignedLog psi_F_log(const FermiEnsemble& e, std::span<const double> x) {
    const int n = e.particles();
    if (static_cast<int>(x.size()) != n) throw InvalidParameter("psi_F: coordinate count must equal N");
    const double L = e.length();
    SignedLog out;
    out.sign = 1;
    out.log_abs = n * (n - 1) / 2.0 * std::log(4.0) + 0.5 * n * std::log(2.0 / L);
    auto take = [&](double f) {
        if (f == 0.0) out.sign = 0;
        if (f < 0.0) out.sign = -out.sign;
        out.log_abs += std::log(std::abs(f));
    };
    for (int k = 0; k < n; ++k) take(std::sin(kPi * x[k] / L));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            take(std::sin(kPi * (x[j] - x[i]) / (2.0 * L)));
            take(std::sin(kPi * (x[i] + x[j]) / (2.0 * L)));
        }
    if (out.sign == 0) out.log_abs = -std::numeric_limits<double>::infinity();
    return out;
}

double psi_F(const FermiEnsemble& e, std::span<const double> x) {
    const int n = e.particles();
    if (static_cast<int>(x.size()) != n) throw InvalidParameter("psi_F: coordinate count must equal N");
    if (n > 20) {
        auto s = psi_F_log(e, x);
        return s.sign == 0 ? 0.0 : s.sign * std::exp(s.log_abs);
    }
    const double L = e.length();
    double v = std::pow(4.0, n * (n - 1) / 2.0) * std::pow(2.0 / L, 0.5 * n);
    for (int k = 0; k < n; ++k) v *= std::sin(kPi * x[k] / L);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            v *= std::sin(kPi * (x[j] - x[i]) / (2.0 * L)) * std::sin(kPi * (x[i] + x[j]) / (2.0 * L));
    return v;
}

namespace {

// One factor of the product form together with its partial derivatives
// with respect to at most two coordinates.
struct Factor {
    double value;
    int p, q;
    double dp, dq;
};

// Product of all factors and, optionally, its gradient via prefix/suffix
// products so that zero factors are handled without division.
double product_with_gradient(const std::vector<Factor>& fs, double prefactor, std::span<double> grad) {
    const std::size_t m = fs.size();
    std::vector<double> prefix(m + 1, 1.0), suffix(m + 1, 1.0);
    for (std::size_t k = 0; k < m; ++k) prefix[k + 1] = prefix[k] * fs[k].value;
    for (std::size_t k = m; k-- > 0;) suffix[k] = suffix[k + 1] * fs[k].value;
    if (!grad.empty()) {
        std::fill(grad.begin(), grad.end(), 0.0);
        for (std::size_t k = 0; k < m; ++k) {
            const double others = prefactor * prefix[k] * suffix[k + 1];
            if (fs[k].p >= 0) grad[static_cast<std::size_t>(fs[k].p)] += fs[k].dp * others;
            if (fs[k].q >= 0) grad[static_cast<std::size_t>(fs[k].q)] += fs[k].dq * others;
        }
    }
    return prefactor * prefix[m];
}

// Factors of psi_F; when (ri, rj) names a pair, its difference factor
// is divided by (x_j - x_i).
std::vector<Factor> psi_factors(const FermiEnsemble& e, std::span<const double> x, int ri, int rj) {
    const int n = e.particles();
    if (static_cast<int>(x.size()) != n) throw InvalidParameter("psi_F: coordinate count must equal N");
    const double L = e.length();
    const double k = kPi / L, half = kPi / (2.0 * L);
    std::vector<Factor> fs;
    fs.reserve(static_cast<std::size_t>(n * n));
    for (int a = 0; a < n; ++a) {
        const double t = k * x[static_cast<std::size_t>(a)];
        fs.push_back({std::sin(t), a, -1, k * std::cos(t), 0.0});
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double d = x[static_cast<std::size_t>(j)] - x[static_cast<std::size_t>(i)];
            const double sum = x[static_cast<std::size_t>(i)] + x[static_cast<std::size_t>(j)];
            if (i == ri && j == rj) {
                // sin(half d) / d and its d-derivative; series near d = 0.
                const double u = half * d;
                double v, dv;
                if (std::abs(u) < 1e-3) {
                    v = half * (1.0 - u * u / 6.0 + u * u * u * u / 120.0);
                    dv = half * half * (-u / 3.0 + u * u * u / 30.0);
                } else {
                    v = std::sin(u) / d;
                    dv = (u * std::cos(u) - std::sin(u)) / (d * d);
                }
                fs.push_back({v, i, j, -dv, dv});
            } else {
                fs.push_back({std::sin(half * d), i, j, -half * std::cos(half * d), half * std::cos(half * d)});
            }
            fs.push_back({std::sin(half * sum), i, j, half * std::cos(half * sum), half * std::cos(half * sum)});
        }
    return fs;
}

double psi_prefactor(const FermiEnsemble& e) {
    const int n = e.particles();
    return std::pow(4.0, n * (n - 1) / 2.0) * std::pow(2.0 / e.length(), 0.5 * n);
}

}  // namespace

double psi_F_gradient(const FermiEnsemble& e, std::span<const double> x, std::span<double> grad) {
    if (grad.size() != x.size()) throw InvalidParameter("psi_F_gradient: gradient size must equal N");
    return product_with_gradient(psi_factors(e, x, -1, -1), psi_prefactor(e), grad);
}

double psi_F_pair_reduced(const FermiEnsemble& e, std::span<const double> x, int i, int j, std::span<double> grad) {
    if (!(0 <= i && i < j && j < e.particles())) throw InvalidParameter("psi_F_pair_reduced: need 0 <= i < j < N");
    if (!grad.empty() && grad.size() != x.size()) throw InvalidParameter("psi_F_pair_reduced: gradient size must equal N");
    return product_with_gradient(psi_factors(e, x, i, j), psi_prefactor(e), grad);
}

double gamma1(const FermiEnsemble& e, double x, double y) {
    const double L = e.length();
    const int n = e.particles();
    return kPi / L * (kernel_of_offset(n, x - y, L) - kernel_of_offset(n, x + y, L));
}

double rho1(const FermiEnsemble& e, double x) { return gamma1(e, x, x); }

double rho2(const FermiEnsemble& e, double x1, double x2) {
    const double g = gamma1(e, x1, x2);
    return rho1(e, x1) * rho1(e, x2) - g * g;
}

double rho3(const FermiEnsemble& e, double x1, double x2, double x3) {
    const std::array<double, 3> x{x1, x2, x3};
    Eigen::Matrix3d m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = gamma1(e, x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)]);
    return m.determinant();
}

double near_diagonal_coefficient(const FermiEnsemble& e, double x0, double s_min, double s_max, int samples) {
    if (!(s_min > 0.0) || !(s_max > s_min) || samples < 3)
        throw InvalidParameter("near-diagonal fit needs 0 < s_min < s_max and >= 3 samples");
    Eigen::MatrixXd A(samples, 2);
    Eigen::VectorXd b(samples);
    for (int i = 0; i < samples; ++i) {
        const double s = s_min * std::pow(s_max / s_min, static_cast<double>(i) / (samples - 1));
        A(i, 0) = 1.0;
        A(i, 1) = s * s;
        b(i) = rho2(e, x0 + 0.5 * s, x0 - 0.5 * s) / (s * s);
    }
    Eigen::VectorXd coef = A.colPivHouseholderQr().solve(b);
    return coef(0);
}

Rho3Report rho3_scaling_check(const FermiEnsemble& e, std::span<const std::array<double, 3>> triples) {
    if (e.particles() < 10) throw InvalidParameter("rho3 scaling check needs N >= 10");
    const double rho = e.density();
    const double rho9 = std::pow(rho, 9);
    Rho3Report out;
    for (const auto& t : triples) {
        const double r3 = rho3(e, t[0], t[1], t[2]);
        const double d12 = t[0] - t[1], d23 = t[1] - t[2], d13 = t[0] - t[2];
        const double prod = d12 * d12 * d23 * d23 * d13 * d13;
        if (prod == 0.0) {
            ++out.coincident;
            out.max_coincident = std::max(out.max_coincident, std::abs(r3));
        } else {
            ++out.separated;
            out.max_ratio = std::max(out.max_ratio, r3 / (rho9 * prod));
        }
    }
    return out;
}

double hardcore_exact_energy(int n, double length, double diameter) {
    if (diameter < 0.0) throw InvalidParameter("hard-core diameter must be >= 0");
    const double shortened = length - (n - 1) * diameter;
    if (!(shortened > 0.0)) throw InvalidParameter("box is overpacked: L <= (N-1) * diameter");
    return dirichlet_energy(FermiEnsemble(n, shortened));
}

}  // namespace dilute1d
