#include <doctest.h>

#include <cmath>
#include <fstream>
#include <numbers>

#include <json.hpp>

#include "dilute1d/errors.hpp"
#include "dilute1d/lieb_liniger.hpp"
#include "oracles.hpp"

using namespace dilute1d;

TEST_CASE("closed-form envelopes") {
    const double p3 = std::numbers::pi * std::numbers::pi / 3.0;
    CHECK(ll_lower_bound(2.0) == doctest::Approx(p3 / 4.0));
    CHECK(ll_expansion(2.0) == doctest::Approx(p3 / 4.0));
    CHECK(ll_lower_bound(1e12) == doctest::Approx(p3));
}

TEST_CASE("gamma inversion and monotonicity") {
    double prev = 0.0;
    for (double g : {0.05, 0.5, 3.0, 30.0, 300.0}) {
        const LLGroundState s = e_of_gamma(g, 120);
        CHECK(s.gamma == doctest::Approx(g).epsilon(1e-12));
        CHECK(s.e > prev);
        CHECK(check_lower_bound(s));
        prev = s.e;
    }
}

TEST_CASE("Nystrom interpolant satisfies the integral equation off the nodes") {
    const LLGroundState s = solve_at_lambda(0.7, 200);
    for (double y : {-0.93, -0.31, 0.0, 0.4071, 0.999}) CHECK(std::abs(oracle::ll_equation_residual(s, y)) < 1e-10);
}

TEST_CASE("node refinement converges") {
    const double e1 = e_of_gamma(10.0, 200).e, e2 = e_of_gamma(10.0, 400).e;
    CHECK(std::abs(e1 - e2) < 1e-10);
}

TEST_CASE("golden: lambda = 1 at 400 nodes") {
    std::ifstream f(DILUTE1D_GOLDEN_DIR "/ll_lambda1_n400.json");
    REQUIRE(f);
    const auto j = nlohmann::json::parse(f);
    const LLGroundState s = solve_at_lambda(1.0, 400);
    CHECK(s.gamma == doctest::Approx(j["gamma"].get<double>()).epsilon(1e-12));
    CHECK(s.e == doctest::Approx(j["e"].get<double>()).epsilon(1e-12));
    CHECK(s.g_integral == doctest::Approx(j["g_integral"].get<double>()).epsilon(1e-12));
    CHECK(interpolate_g(s, 0.5) == doctest::Approx(j["g_at"]["0.5"].get<double>()).epsilon(1e-12));
}

TEST_CASE("argument and regime errors") {
    CHECK_THROWS_AS(solve_at_lambda(0.0), InvalidParameter);
    CHECK_THROWS_AS(solve_at_lambda(1.0, 4), InvalidParameter);
    CHECK_THROWS_AS(e_of_gamma(-1.0), InvalidParameter);
    CHECK_THROWS_AS(expansion_residual(e_of_gamma(2.0, 64)), OutOfRegime);
    CHECK(e_of_gamma(1e-4, 200).ill_conditioned);
}
