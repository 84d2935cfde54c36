#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dilute1d/ed_oracle.hpp"
#include "dilute1d/errors.hpp"
#include "dilute1d/free_fermi.hpp"

using namespace dilute1d;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("grid Hamiltonian shape and symmetry") {
    OracleProblem p{2, 1.0, Boundary::Dirichlet, make_lieb_liniger(1.0), Statistics::Bose, 16};
    const GridHamiltonian b = build_hamiltonian(p);
    CHECK(b.sites.size() == 120);
    CHECK(b.nodes_per_dimension == 15);
    CHECK((Eigen::MatrixXd(b.matrix) - Eigen::MatrixXd(b.matrix).transpose()).norm() == 0.0);
    p.statistics = Statistics::Fermi;
    CHECK(build_hamiltonian(p).sites.size() == 105);
    p.boundary = Boundary::Neumann;
    CHECK(build_hamiltonian(p).nodes_per_dimension == 16);
}

TEST_CASE("single particle and free fermions") {
    const SpectralResult one = ground_energy({1, 2.0, Boundary::Dirichlet, Potential{}, Statistics::Bose, 256}, 3);
    CHECK(one.extrapolated == doctest::Approx(kPi * kPi / 4.0).epsilon(1e-8));
    CHECK(one.grids.size() == 3);
    CHECK(one.order == doctest::Approx(2.0).epsilon(0.05));

    const SpectralResult neu = ground_energy({1, 2.0, Boundary::Neumann, Potential{}, Statistics::Bose, 64}, 3);
    CHECK(std::abs(neu.extrapolated) < 1e-10);

    const SpectralResult f = ground_energy({2, 1.0, Boundary::Dirichlet, Potential{}, Statistics::Fermi, 128}, 3);
    CHECK(f.extrapolated == doctest::Approx(5.0 * kPi * kPi).epsilon(1e-6));
}

TEST_CASE("impenetrable point at contact reproduces the Fermi sector") {
    const Potential hc({HardCoreBand{0.0, 0.0}});
    const double bose = ground_energy({2, 1.0, Boundary::Dirichlet, hc, Statistics::Bose, 128}, 3).extrapolated;
    const double fermi = ground_energy({2, 1.0, Boundary::Dirichlet, Potential{}, Statistics::Fermi, 128}, 3).extrapolated;
    CHECK(bose == doctest::Approx(fermi).epsilon(1e-10));
}

TEST_CASE("hard rods match the shortened box") {
    const double e = ground_energy({2, 4.0, Boundary::Dirichlet, make_hard_core(0.5), Statistics::Bose, 128}, 3).extrapolated;
    CHECK(e == doctest::Approx(hardcore_exact_energy(2, 4.0, 0.5)).epsilon(1e-5));
}

TEST_CASE("Neumann lies below Dirichlet and the ground state is returned on request") {
    OracleProblem p{2, 4.0, Boundary::Neumann, make_lieb_liniger(1.0), Statistics::Bose, 128};
    const SpectralResult n = ground_energy(p, 3, true);
    p.boundary = Boundary::Dirichlet;
    const SpectralResult d = ground_energy(p, 3);
    CHECK(n.extrapolated < d.extrapolated);
    CHECK(n.ground_state.size() == static_cast<Eigen::Index>(n.grids.back().sites));
    CHECK(d.ground_state.size() == 0);
    for (const auto& g : d.grids) CHECK(g.residual < 1e-8);
}

TEST_CASE("oracle argument errors") {
    const OracleProblem ok{2, 1.0, Boundary::Dirichlet, Potential{}, Statistics::Bose, 64};
    CHECK_THROWS_AS(ground_energy(ok, 2), InvalidParameter);
    OracleProblem p = ok;
    p.cells = 66;
    CHECK_THROWS_AS(ground_energy(p, 3), InvalidParameter);
    p = ok;
    p.particles = 4;
    CHECK_THROWS_AS(ground_energy(p, 3), InvalidParameter);
    p = ok;
    p.potential = make_hard_core(0.13);
    CHECK_THROWS_AS(ground_energy(p, 3), ResolutionError);
    p = ok;
    p.potential = make_hard_core(0.6);
    p.particles = 3;
    CHECK_THROWS_AS(build_hamiltonian(p), InvalidParameter);
    CHECK(parse_boundary("neumann") == Boundary::Neumann);
    CHECK_THROWS_AS(parse_boundary("periodic"), InvalidParameter);
}

TEST_CASE("Robinson inequality for a contact interaction") {
    const RobinsonCheck r = robinson_check(2, 4.0, 1.0, make_lieb_liniger(1.0), 128, 3);
    CHECK(r.holds);
    CHECK(r.slack == doctest::Approx(4.0));
    CHECK_THROWS_AS(robinson_check(2, 4.0, 1.0, Potential({DeltaSpike{0.5, 1.0}})), InvalidParameter);
    CHECK_THROWS_AS(robinson_check(2, 4.0, 1.0, Potential({PiecewiseConstant{{0.0, 0.2, 0.4}, {1.0, 2.0}}})),
                    InvalidParameter);
    CHECK_THROWS_AS(robinson_check(2, 4.0, 0.0, make_lieb_liniger(1.0)), InvalidParameter);
}
