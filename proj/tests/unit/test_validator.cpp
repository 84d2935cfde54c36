#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dilute1d/errors.hpp"
#include "dilute1d/validator.hpp"

using namespace dilute1d;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("expansion energy") {
    CHECK(expansion_energy(10, 100.0, -0.2) == doctest::Approx(10 * kPi * kPi / 3 * 0.01 * 0.96).epsilon(1e-14));
    CHECK(expansion_energy(4, 8.0, 0.0) == doctest::Approx(4 * kPi * kPi / 3 * 0.25).epsilon(1e-15));
}

TEST_CASE("symmetry mapping") {
    const SymmetryMap b = map_symmetry(Symmetry::anyon(0.0), 1.0, Potential{});
    CHECK(b.effective.spike_strength_at(0.0) == doctest::Approx(2.0));
    const SymmetryMap a = map_symmetry(Symmetry::anyon(2 * kPi / 3), 1.0, Potential{});
    CHECK(a.effective.spike_strength_at(0.0) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(a.effective_coupling == doctest::Approx(2.0));
    const SymmetryMap pi = map_symmetry(Symmetry::anyon(kPi), 1.0, Potential{});
    CHECK(pi.impenetrable);
    CHECK(pi.effective == map_symmetry(Symmetry::fermi(), 0.0, Potential{}).effective);
    const SymmetryMap f = map_symmetry(Symmetry::fermi(), 0.0, make_hard_core(0.2));
    CHECK(f.effective == make_hard_core(0.2).canonical());

    CHECK_THROWS_AS(map_symmetry(Symmetry::anyon(-0.1), 1.0, Potential{}), InvalidParameter);
    CHECK_THROWS_AS(map_symmetry(Symmetry::anyon(3.5), 1.0, Potential{}), InvalidParameter);
    CHECK_THROWS_AS(map_symmetry(Symmetry::anyon(1.0), 1.0, make_lieb_liniger(1.0)), InvalidParameter);
    CHECK_THROWS_AS(map_symmetry(Symmetry::bose(), -1.0, Potential{}), InvalidParameter);
    CHECK(parse_symmetry("anyon", 0.5).kappa == 0.5);
    CHECK_THROWS_AS(parse_symmetry("boson", 0.0), InvalidParameter);
}

TEST_CASE("envelope ordering") {
    for (double a : {-0.4, -0.05, 0.0, 0.1})
        for (double cu : {0.0, 1.0, 3.0}) {
            const Envelope e = envelope(5, 50.0, a, 0.1, cu, 1.0);
            CHECK(e.lower <= e.expansion);
            CHECK(e.expansion <= e.upper);
            CHECK(e.expansion == doctest::Approx(expansion_energy(5, 50.0, a)));
        }
    CHECK_THROWS_AS(envelope(5, 50.0, 0.0, 0.0, -1.0, 1.0), InvalidParameter);
}

TEST_CASE("validate without oracle") {
    const ExpansionReport r = validate(2, 40.0, Potential{}, Symmetry::anyon(2 * kPi / 3), 1.0);
    CHECK(r.scattering_length == doctest::Approx(-1.0));
    CHECK(r.verdict);
    CHECK_FALSE(r.oracle.has_value());
    CHECK(r.bounds.expansion < r.bounds.leading);

    const ExpansionReport hc = validate(2, 40.0, make_hard_core(0.2), Symmetry::bose(), 0.0);
    CHECK(hc.bounds.expansion > hc.bounds.leading);

    const ExpansionReport weak = validate(2, 4.0, Potential{}, Symmetry::bose(), 0.5);
    CHECK_FALSE(weak.warnings.empty());

    CHECK_THROWS_AS(validate(2, 40.0, Potential{}, Symmetry::bose(), 0.0), InvalidParameter);
    CHECK_THROWS_AS(validate(4, 40.0, Potential{}, Symmetry::bose(), 1.0, OracleSettings{true, 64, 3}), InvalidParameter);
}

TEST_CASE("bitwise reductions") {
    const ExpansionReport a = validate(3, 30.0, make_square_barrier(3.0, 0.3), Symmetry::anyon(0.0), 0.7);
    const ExpansionReport b = validate(3, 30.0, make_square_barrier(3.0, 0.3), Symmetry::bose(), 0.7);
    CHECK(same_physics(a, b));
    const ExpansionReport c = validate(3, 30.0, make_square_barrier(3.0, 0.3), Symmetry::bose(), 0.8);
    CHECK_FALSE(same_physics(a, c));
}
