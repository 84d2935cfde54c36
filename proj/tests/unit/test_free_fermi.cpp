#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "dilute1d/errors.hpp"
#include "dilute1d/free_fermi.hpp"
#include "dilute1d/quadrature.hpp"
#include "oracles.hpp"

using namespace dilute1d;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("energy and exact hard-rod energy") {
    const FermiEnsemble e(3, 2.0);
    CHECK(dirichlet_energy(e) == doctest::Approx(14.0 * kPi * kPi / 4.0));
    CHECK(hardcore_exact_energy(3, 2.0, 0.0) == doctest::Approx(dirichlet_energy(e)));
    CHECK(hardcore_exact_energy(2, 10.0, 0.5) == doctest::Approx(5.0 * kPi * kPi / (9.5 * 9.5)));
    CHECK_THROWS_AS(hardcore_exact_energy(3, 1.0, 0.5), InvalidParameter);
    CHECK_THROWS_AS(FermiEnsemble(0, 1.0), InvalidParameter);
    CHECK_THROWS_AS(FermiEnsemble(2, -1.0), InvalidParameter);
}

TEST_CASE("Dirichlet kernel and its removable singularities") {
    for (int n : {1, 4, 9}) {
        const double peak = (2.0 * n + 1.0) / (2.0 * kPi);
        CHECK(dirichlet_kernel(n, 0.0) == doctest::Approx(peak));
        CHECK(dirichlet_kernel(n, 2.0 * kPi) == doctest::Approx(peak));
        CHECK(dirichlet_kernel(n, 1e-9) == doctest::Approx(peak));
        const double t = 0.37;
        CHECK(dirichlet_kernel(n, t) == doctest::Approx(std::sin((n + 0.5) * t) / (2 * kPi * std::sin(t / 2))));
    }
}

TEST_CASE("product form is positive, antisymmetric and vanishes on nodes") {
    const FermiEnsemble e(4, 3.0);
    std::vector<double> x{0.2, 0.9, 1.7, 2.6};
    const double v = psi_F(e, x);
    CHECK(v > 0.0);
    std::swap(x[1], x[2]);
    CHECK(psi_F(e, x) == doctest::Approx(-v));
    CHECK(psi_F(e, std::vector<double>{0.2, 0.9, 0.9, 2.6}) == 0.0);
    CHECK(std::abs(psi_F(e, std::vector<double>{0.0, 0.9, 1.7, 2.6})) < 1e-15);
    CHECK_THROWS_AS(psi_F(e, std::vector<double>{0.1, 0.2}), InvalidParameter);
}

TEST_CASE("log path agrees with direct evaluation and survives large N") {
    const FermiEnsemble e(8, 5.0);
    const std::vector<double> x{0.3, 0.8, 1.4, 2.0, 2.7, 3.3, 4.1, 4.6};
    const SignedLog l = psi_F_log(e, x);
    CHECK(l.sign == 1);
    CHECK(std::exp(l.log_abs) == doctest::Approx(psi_F(e, x)).epsilon(1e-12));

    const FermiEnsemble big(40, 40.0);
    std::vector<double> y(40);
    for (int i = 0; i < 40; ++i) y[static_cast<std::size_t>(i)] = i + 0.5;
    const SignedLog lb = psi_F_log(big, y);
    CHECK(lb.sign == 1);
    CHECK(std::isfinite(lb.log_abs));
}

TEST_CASE("Slater determinant agreement for small N") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.3);
    for (int n = 1; n <= 4; ++n) {
        const FermiEnsemble e(n, 1.3);
        std::vector<double> x(static_cast<std::size_t>(n));
        for (double& xi : x) xi = u(rng);
        const double sign = (n * (n - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
        CHECK(psi_F(e, x) == doctest::Approx(sign * oracle::slater_determinant(n, 1.3, x)).epsilon(1e-11));
    }
}

TEST_CASE("gradient matches central differences") {
    const FermiEnsemble e(3, 2.0);
    std::vector<double> x{0.3, 0.7, 1.6}, grad(3);
    psi_F_gradient(e, x, grad);
    for (std::size_t k = 0; k < 3; ++k) {
        const double h = 1e-6;
        auto xp = x, xm = x;
        xp[k] += h;
        xm[k] -= h;
        CHECK(grad[k] == doctest::Approx((psi_F(e, xp) - psi_F(e, xm)) / (2 * h)).epsilon(1e-7));
    }
    std::vector<double> bad(2);
    CHECK_THROWS_AS(psi_F_gradient(e, x, bad), InvalidParameter);
}

TEST_CASE("pair-reduced form divides out the pair and stays finite at contact") {
    const FermiEnsemble e(3, 2.0);
    const std::vector<double> x{0.3, 0.7, 1.6};
    CHECK(psi_F_pair_reduced(e, x, 0, 1, {}) * (0.7 - 0.3) == doctest::Approx(psi_F(e, x)).epsilon(1e-13));
    const std::vector<double> c{0.3, 0.7, 0.7};
    const double at = psi_F_pair_reduced(e, c, 1, 2, {});
    const std::vector<double> near{0.3, 0.7, 0.7 + 1e-7};
    CHECK(std::isfinite(at));
    CHECK(at == doctest::Approx(psi_F(e, near) / 1e-7).epsilon(1e-6));
    CHECK_THROWS_AS(psi_F_pair_reduced(e, x, 1, 1, {}), InvalidParameter);
}

TEST_CASE("reduced densities") {
    const FermiEnsemble e(5, 3.0);
    for (double x : {0.2, 1.1, 2.9})
        for (double y : {0.0, 0.4, 1.1, 3.0}) CHECK(gamma1(e, x, y) == doctest::Approx(oracle::gamma1_sine_sum(5, 3.0, x, y)).epsilon(1e-12).scale(1.0));
    const GaussRule g = gauss_legendre(64);
    CHECK(integrate(g, 0.0, 3.0, [&](double x) { return rho1(e, x); }) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(std::abs(rho2(e, 1.3, 1.3)) < 1e-12);
    CHECK(rho2(e, 0.4, 2.2) >= 0.0);
    CHECK(std::abs(rho3(e, 0.4, 0.4, 2.0)) < 1e-12);
    CHECK(rho3(e, 0.4, 1.3, 2.0) >= 0.0);
}

TEST_CASE("near-diagonal coefficient in the bulk") {
    const FermiEnsemble e(60, 60.0);
    const double c = near_diagonal_coefficient(e, 30.0, 1e-4, 1e-2);
    CHECK(c == doctest::Approx(kPi * kPi / 3.0).epsilon(0.1));
    CHECK_THROWS_AS(near_diagonal_coefficient(e, 30.0, 1e-2, 1e-4), InvalidParameter);
}

TEST_CASE("three-body scaling report") {
    const FermiEnsemble e(12, 12.0);
    const std::vector<std::array<double, 3>> triples{
        {1.0, 1.3, 2.0}, {5.0, 5.05, 5.2}, {3.0, 3.0, 8.0}, {7.0, 9.0, 11.0}};
    const Rho3Report r = rho3_scaling_check(e, triples);
    CHECK(r.separated == 3);
    CHECK(r.coincident == 1);
    CHECK(r.max_coincident < 1e-12);
    CHECK(std::isfinite(r.max_ratio));
    CHECK_THROWS_AS(rho3_scaling_check(FermiEnsemble(4, 4.0), triples), InvalidParameter);
}
