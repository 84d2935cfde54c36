#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "dilute1d/errors.hpp"

namespace dilute1d::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

template <class F>
double gk(F&& f, double a, double b) {
    if (!(b > a)) return 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-14);
}

}  // namespace

double slater_determinant(int n, double length, std::span<const double> x) {
    // 50 significant digits: near the nodal set the determinant is a tiny
    // difference of O(1) products and double LU loses relative accuracy.
    using Real = boost::multiprecision::cpp_bin_float_50;
    const Real pi = boost::math::constants::pi<Real>();
    const Real norm = sqrt(Real(2) / Real(length));
    std::vector<std::vector<Real>> m(static_cast<std::size_t>(n), std::vector<Real>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = norm * sin(pi * (j + 1) * Real(x[static_cast<std::size_t>(i)]) / Real(length));
    Real det = 1;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (abs(m[i][k]) > abs(m[piv][k])) piv = i;
        if (m[piv][k] == 0) return 0.0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (int i = k + 1; i < n; ++i) {
            const Real f = m[i][k] / m[k][k];
            for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return static_cast<double>(det);
}

double gamma1_sine_sum(int n, double length, double x, double y, int kx, int ky) {
    // d^k/dx^k sin(a x) = a^k sin(a x + k pi / 2).
    double sum = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double a = kPi * j / length;
        sum += std::pow(a, kx) * std::sin(a * x + kx * kPi / 2) * std::pow(a, ky) * std::sin(a * y + ky * kPi / 2);
    }
    return 2.0 / length * sum;
}

double square_barrier_length(double height, double radius) {
    const double k = std::sqrt(height / 2.0);
    return radius - 1.0 / (k * std::tanh(k * radius));
}

double scattering_functional(const ScatteringResult& r) {
    const Potential& p = r.potential;
    std::vector<double> cuts{0.0, r.radius};
    for (const auto& seg : r.segments) cuts.push_back(seg.right);
    for (const auto& c : p.components()) {
        if (const auto* hc = std::get_if<HardCoreBand>(&c)) {
            cuts.push_back(hc->inner);
            cuts.push_back(hc->outer);
        } else if (const auto* d = std::get_if<DeltaSpike>(&c)) {
            cuts.push_back(d->location);
        } else {
            for (double b : std::get<PiecewiseConstant>(c).breakpoints) cuts.push_back(b);
        }
    }
    std::erase_if(cuts, [&](double t) { return t < 0.0 || t > r.radius; });
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    // Half line, doubled: the integrand is even in both channels.
    double half = 0.0;
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        const double a = cuts[i - 1], b = cuts[i];
        half += gk(
            [&](double x) {
                const double f = r.value(x), fp = r.slope(x);
                return 2.0 * fp * fp + p.regular_value(x) * f * f;
            },
            a, b);
    }
    double total = 2.0 * half;
    for (const auto& c : p.components()) {
        const auto* d = std::get_if<DeltaSpike>(&c);
        if (!d || d->location > r.radius) continue;
        const double f = r.value(d->location);
        total += (d->location == 0.0 ? 1.0 : 2.0) * d->strength * f * f;
    }
    return total;
}

double two_body_box_energy(double c, double length) {
    if (!(c > 0.0) || !(length > 0.0)) throw InvalidParameter("two-body oracle needs c > 0 and L > 0");
    const double L = length;
    auto residual = [&](const Eigen::Vector2d& k) {
        const double d = k(0) - k(1), s = k(0) + k(1);
        return Eigen::Vector2d(k(0) * L - kPi + std::atan(d / c) + std::atan(s / c),
                               k(1) * L - 2.0 * kPi - std::atan(d / c) + std::atan(s / c));
    };
    Eigen::Vector2d k(kPi / L, 2.0 * kPi / L);
    for (int it = 0; it < 200; ++it) {
        const Eigen::Vector2d f = residual(k);
        if (f.norm() < 1e-15 * L * k.norm()) break;
        const double d = k(0) - k(1), s = k(0) + k(1);
        const double gd = c / (c * c + d * d), gs = c / (c * c + s * s);
        Eigen::Matrix2d J;
        J << L + gd + gs, -gd + gs, -gd + gs, L + gd + gs;
        const Eigen::Vector2d step = J.partialPivLu().solve(f);
        double damp = 1.0;
        while (damp > 1e-6 && residual(k - damp * step).norm() > f.norm()) damp *= 0.5;
        k -= damp * step;
    }
    if (residual(k).norm() > 1e-12 * L * k.norm()) throw ConvergenceError("two-body Bethe equations did not converge");
    return k.squaredNorm();
}

double ll_equation_residual(const LLGroundState& s, double y) {
    const double lam = s.lambda;
    const double integral = gk(
        [&](double x) { return 2.0 * lam / (lam * lam + (x - y) * (x - y)) * interpolate_g(s, x); }, -1.0, 1.0);
    return 2.0 * kPi * interpolate_g(s, y) - 1.0 - integral;
}

}  // namespace dilute1d::oracle
