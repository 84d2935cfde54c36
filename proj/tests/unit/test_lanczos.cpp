#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "dilute1d/errors.hpp"
#include "dilute1d/lanczos.hpp"

using namespace dilute1d;

TEST_CASE("largest eigenvalues of a random symmetric matrix") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> n01;
    const int n = 300;
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = n01(rng);
    a = 0.5 * (a + a.transpose()).eval();
    a.diagonal().array() += Eigen::ArrayXd::LinSpaced(n, 0.0, 60.0);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(a);

    const LanczosResult r = lanczos_largest([&](const Eigen::VectorXd& x, Eigen::VectorXd& y) { y = a * x; }, n);
    REQUIRE(r.converged);
    REQUIRE(r.values.size() == 3);
    for (int k = 0; k < 3; ++k) CHECK(r.values[static_cast<std::size_t>(k)] == doctest::Approx(ref.eigenvalues()(n - 1 - k)).epsilon(1e-10));
    CHECK(std::is_sorted(r.values.rbegin(), r.values.rend()));
    Eigen::VectorXd y = a * r.vectors[0];
    CHECK((y - r.values[0] * r.vectors[0]).norm() < 1e-8);
}

TEST_CASE("tiny operators and bad options") {
    const Eigen::Vector2d d(1.0, 5.0);
    LanczosOptions o;
    o.wanted = 1;
    const LanczosResult r =
        lanczos_largest([&](const Eigen::VectorXd& x, Eigen::VectorXd& y) { y = d.cwiseProduct(x); }, 2, o);
    CHECK(r.values[0] == doctest::Approx(5.0));
    o.wanted = 0;
    CHECK_THROWS_AS(lanczos_largest([](const Eigen::VectorXd& x, Eigen::VectorXd& y) { y = x; }, 2, o), InvalidParameter);
    CHECK_THROWS_AS(lanczos_largest([](const Eigen::VectorXd& x, Eigen::VectorXd& y) { y = x; }, 0), InvalidParameter);
}
