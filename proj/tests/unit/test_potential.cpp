#include <doctest.h>

#include "dilute1d/errors.hpp"
#include "dilute1d/potential.hpp"

using namespace dilute1d;

TEST_CASE("factories report range, mass and impenetrability") {
    const Potential ll = make_lieb_liniger(1.5);
    CHECK(ll.range() == 0.0);
    CHECK(ll.spike_strength_at(0.0) == 3.0);
    CHECK(ll.regular_mass() == 3.0);  // deltas carry mass
    CHECK_FALSE(ll.is_impenetrable());

    const Potential hc = make_hard_core(0.3);
    CHECK(hc.range() == 0.3);
    CHECK(hc.is_impenetrable());
    CHECK(hc.hard_core_edge() == 0.3);

    const Potential sq = make_square_barrier(4.0, 0.5);
    CHECK(sq.regular_mass() == doctest::Approx(4.0));
    CHECK(sq.regular_value(0.2) == 4.0);
    CHECK(sq.regular_value(0.6) == 0.0);
    CHECK(sq.hard_core_edge() == -1.0);

    CHECK(Potential{}.is_free());
    CHECK_FALSE(ll.is_free());
}

TEST_CASE("invalid components are rejected") {
    CHECK_THROWS_AS(make_lieb_liniger(0.0), InvalidParameter);
    CHECK_THROWS_AS(make_hard_core(-1.0), InvalidParameter);
    CHECK_THROWS_AS(Potential({HardCoreBand{0.3, 0.1}}), InvalidParameter);
    CHECK_THROWS_AS(Potential({DeltaSpike{0.1, -1.0}}), InvalidParameter);
    CHECK_THROWS_AS(Potential({PiecewiseConstant{{0.1, 0.2}, {1.0}}}), InvalidParameter);
    CHECK_THROWS_AS(Potential({PiecewiseConstant{{0.0, 0.2, 0.1}, {1.0, 2.0}}}), InvalidParameter);
    CHECK_THROWS_AS(Potential({PiecewiseConstant{{0.0, 0.2}, {-1.0}}}), InvalidParameter);
}

TEST_CASE("canonical order makes equal physics compare equal") {
    const Potential a({DeltaSpike{0.0, 2.0}, HardCoreBand{0.1, 0.2}, PiecewiseConstant{{0.0, 0.5}, {1.0}}});
    const Potential b({PiecewiseConstant{{0.0, 0.5}, {1.0}}, HardCoreBand{0.1, 0.2}, DeltaSpike{0.0, 2.0}});
    CHECK(a.canonical() == b.canonical());
    CHECK(a.digest() == b.digest());
    CHECK(a.digest() != make_lieb_liniger(1.0).digest());
}

TEST_CASE("config text round trips") {
    const Potential p({DeltaSpike{0.25, 2.0}, HardCoreBand{0.0, 0.1}, PiecewiseConstant{{0.0, 0.1, 0.4}, {5.0, 1.5}}});
    const Potential q = parse_potential(to_config(p));
    CHECK(q.canonical() == p.canonical());

    const Potential r = parse_potential(
        "# comment\n[potential.delta]\nx0 = 0.0\nstrength = 2.0\n\n[potential.hardcore]\nx1 = 0.0\nx2 = 0.3\n");
    CHECK(r.spike_strength_at(0.0) == 2.0);
    CHECK(r.range() == doctest::Approx(0.3));
}

TEST_CASE("config errors carry line numbers") {
    try {
        parse_potential("[potential.delta]\nx0 = 0.0\nstrenght = 2.0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_potential("[potential.delta]\nx0 = 0.0\n"), ParseError);
    CHECK_THROWS_AS(parse_potential("[potential.delta]\nx0 = -1\nstrength = 1\n"), ParseError);
    CHECK_THROWS_AS(parse_potential("[potential.magic]\n"), ParseError);
    CHECK_THROWS_AS(parse_potential("x0 = 1\n"), ParseError);
    CHECK_THROWS_AS(parse_potential("[potential.hardcore]\nx1 = 0.3\nx2 = 0.1\n"), ParseError);
    CHECK_THROWS_AS(parse_potential("[potential.steps]\nbreakpoints = 0, 1\nvalues = [1]\n"), ParseError);
    CHECK_THROWS_AS(load_potential("/nonexistent/dir/v.toml"), IoError);
}
