#include <doctest.h>

#include <cmath>

#include "dilute1d/errors.hpp"
#include "dilute1d/scattering.hpp"
#include "oracles.hpp"

using namespace dilute1d;

TEST_CASE("closed-form scattering lengths") {
    for (double c : {0.5, 1.0, 10.0}) {
        const auto r = solve_scattering(make_lieb_liniger(c), Channel::Even, 1.0);
        REQUIRE(r.scattering_length);
        CHECK(*r.scattering_length == doctest::Approx(-2.0 / c).epsilon(1e-12));
    }
    const auto hc = solve_scattering(make_hard_core(0.3), Channel::Even, 1.0);
    CHECK(std::abs(*hc.scattering_length - 0.3) < 1e-13);
    const auto sq = solve_scattering(make_square_barrier(50.0, 0.5), Channel::Even, 2.0);
    CHECK(*sq.scattering_length == doctest::Approx(oracle::square_barrier_length(50.0, 0.5)).epsilon(1e-12));
}

TEST_CASE("scattering length does not depend on R") {
    const Potential p({PiecewiseConstant{{0.0, 0.2, 0.5}, {30.0, 3.0}}, DeltaSpike{0.35, 1.0}});
    const double a1 = *solve_scattering(p, Channel::Even, 0.6).scattering_length;
    for (double R : {1.0, 3.0, 10.0}) CHECK(*solve_scattering(p, Channel::Even, R).scattering_length == doctest::Approx(a1).epsilon(1e-12));
}

TEST_CASE("odd channel and the free case") {
    CHECK(std::abs(*solve_scattering(make_lieb_liniger(3.0), Channel::Odd, 1.0).scattering_length) < 1e-14);
    CHECK(*solve_scattering(make_hard_core(0.2), Channel::Odd, 1.0).scattering_length == doctest::Approx(0.2));
    const auto free = solve_scattering(Potential{}, Channel::Even, 1.0);
    CHECK_FALSE(free.scattering_length.has_value());
    CHECK(free.minimal_energy() == 0.0);
    CHECK(std::abs(*solve_scattering(Potential{}, Channel::Odd, 1.0).scattering_length) < 1e-14);
}

TEST_CASE("stronger barriers push a toward the range") {
    double prev = -1e300;
    for (double h : {0.1, 1.0, 10.0, 100.0, 1e4, 1e8}) {
        const double a = *solve_scattering(make_square_barrier(h, 0.5), Channel::Even, 1.0).scattering_length;
        CHECK(a > prev);
        CHECK(a < 0.5);
        prev = a;
    }
    CHECK(prev == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("energy identity, quadrature oracle and Dyson check") {
    const Potential p({HardCoreBand{0.0, 0.1}, PiecewiseConstant{{0.0, 0.3}, {8.0}}, DeltaSpike{0.2, 0.7}});
    const auto r = solve_scattering(p, Channel::Even, 0.9);
    const double target = 4.0 / (0.9 - *r.scattering_length);
    CHECK(r.minimal_energy() == doctest::Approx(target).epsilon(1e-14));
    CHECK(scattering_energy(r) == doctest::Approx(target).epsilon(1e-10));
    CHECK(oracle::scattering_functional(r) == doctest::Approx(target).epsilon(1e-10));
    CHECK(r.value(0.9) == doctest::Approx(1.0));
    CHECK(r.value(0.05) == 0.0);

    const DysonCheck d = check_dyson_inequality(r, sample_solution(r, 200));
    CHECK(d.holds);
    CHECK(d.lhs >= d.rhs - 1e-9 * d.rhs);
}

TEST_CASE("invalid radius and malformed trials") {
    CHECK_THROWS_AS(solve_scattering(make_hard_core(0.5), Channel::Even, 0.5), InvalidRadius);
    const auto r = solve_scattering(make_hard_core(0.2), Channel::Even, 1.0);
    CHECK_THROWS_AS(check_dyson_inequality(r, SampledFunction{{-1.0, 1.0}, {1.0, 1.0}}), InvalidTrial);
    CHECK_THROWS_AS(check_dyson_inequality(r, SampledFunction{{-0.5, 1.0}, {1.0, 1.0}}), InvalidTrial);
    CHECK_THROWS_AS(check_dyson_inequality(r, SampledFunction{{-1.0, 0.0, 1.0}, {1.0, 0.0, 0.5}}), InvalidTrial);
}
