#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "dilute1d/ed_oracle.hpp"
#include "dilute1d/errors.hpp"
#include "dilute1d/trial_states.hpp"

using namespace dilute1d;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("without interaction the trial is the free Fermi state") {
    const TrialState t2 = build_trial(2, 1.0, Potential{}, 0.3);
    CHECK(trial_energy(t2).energy == doctest::Approx(5.0 * kPi * kPi).epsilon(1e-10));
    const TrialState t3 = build_trial(3, 1.0, Potential{}, 0.2);
    CHECK(t3.experimental());
    CHECK_FALSE(t3.warnings().empty());
    CHECK(trial_energy(t3).energy == doctest::Approx(14.0 * kPi * kPi).epsilon(1e-8));
}

TEST_CASE("profile is continuous at b and the state is bosonic") {
    const TrialState t = build_trial(2, 10.0, make_lieb_liniger(1.0), 1.0);
    CHECK(t.profile(1.0) == doctest::Approx(1.0));
    CHECK(t.profile(1.0 - 1e-9) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(t.profile(1.5) == 1.0);
    const std::vector<double> x{2.0, 2.4}, y{2.4, 2.0};
    CHECK(t.value(x) == doctest::Approx(t.value(y)));
    CHECK(t.value(x) > 0.0);

    std::vector<double> grad(2);
    const double v = t.value_and_gradient(x, grad);
    const double h = 1e-6;
    CHECK(grad[1] == doctest::Approx((t.value(std::vector<double>{2.0, 2.4 + h}) - t.value(std::vector<double>{2.0, 2.4 - h})) / (2 * h)).epsilon(1e-6));
    CHECK(v == doctest::Approx(t.value(x)));
}

TEST_CASE("hard-core trial vanishes inside the core") {
    const TrialState t = build_trial(2, 10.0, make_hard_core(0.25), 0.5);
    CHECK(t.value(std::vector<double>{3.0, 3.2}) == 0.0);
    CHECK(t.value(std::vector<double>{3.0, 3.4}) > 0.0);
}

TEST_CASE("variational bound over the oracle, N = 2") {
    const Potential p = make_hard_core(0.25);
    const double ed = ground_energy({2, 5.0, Boundary::Dirichlet, p, Statistics::Bose, 160}, 3).extrapolated;
    for (double b : {0.5, 1.0}) CHECK(trial_energy(build_trial(2, 5.0, p, b)).energy >= ed * (1 - 1e-6));
}

TEST_CASE("quadrature order doubling is stable") {
    const TrialEnergy e = trial_energy(build_trial(2, 10.0, make_square_barrier(20.0, 0.25), 0.5), 64);
    CHECK(e.relative_change < 1e-9);
    CHECK(e.order == 128);
    CHECK(e.norm > 0.0);
    CHECK(e.energy == doctest::Approx((e.kinetic + e.potential) / e.norm));
}

TEST_CASE("trial argument errors and warnings") {
    CHECK_THROWS_AS(build_trial(2, 10.0, make_hard_core(0.5), 0.5), InvalidScale);
    CHECK_THROWS_AS(build_trial(2, 1.0, make_lieb_liniger(1.0), 1.5), InvalidScale);
    CHECK_THROWS_AS(build_trial(4, 10.0, make_lieb_liniger(1.0), 1.0), InvalidParameter);
    CHECK_THROWS_AS(build_trial(3, 10.0, Potential({HardCoreBand{0.1, 0.2}}), 1.0), InvalidParameter);
    CHECK_THROWS_AS(trial_energy(build_trial(2, 10.0, make_lieb_liniger(1.0), 1.0), 32), InvalidParameter);
    CHECK_FALSE(build_trial(2, 10.0, make_lieb_liniger(1.0), 3.0).warnings().empty());
}

TEST_CASE("proof-side healing length and upper bound") {
    const Potential hc = make_hard_core(0.1);
    const double b = theorem_healing_length(10, 100.0, hc);
    CHECK(b >= 0.1);
    CHECK(b == doctest::Approx(std::max(std::pow(0.1, -0.2) * std::pow(0.1, 0.8), 0.1)));
    const double lead = 10 * kPi * kPi / 3 * 0.01;
    CHECK(upper_bound_theorem(10, 100.0, hc) > lead);
    CHECK(upper_bound_theorem(10, 100.0, hc, 0.0) == doctest::Approx(lead * (1 + 2 * 0.1 * 0.1 * b / (b - 0.1))));
    CHECK_THROWS_AS(upper_bound_theorem(10, 100.0, Potential{}), InvalidParameter);
    CHECK_THROWS_AS(theorem_healing_length(10, 100.0, Potential{}), InvalidParameter);
}
