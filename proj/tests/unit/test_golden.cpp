#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "dilute1d/validator.hpp"

using namespace dilute1d;

TEST_CASE("golden: N = 2, L = 40, contact c = 5 with the oracle") {
    std::ifstream f(DILUTE1D_GOLDEN_DIR "/validate_n2_L40_c5.json");
    REQUIRE(f);
    const auto j = nlohmann::json::parse(f);
    const ExpansionReport r = validate(2, 40.0, Potential{}, Symmetry::bose(), 5.0,
                                       OracleSettings{true, j["cells"].get<int>(), j["refinements"].get<int>()});
    REQUIRE(r.oracle.has_value());
    CHECK(r.scattering_length == doctest::Approx(-0.4).epsilon(1e-14));
    CHECK(r.bounds.leading == doctest::Approx(j["leading"].get<double>()).epsilon(1e-14));
    CHECK(r.bounds.expansion == doctest::Approx(j["expansion"].get<double>()).epsilon(1e-14));
    CHECK(r.bounds.lower == doctest::Approx(j["lower"].get<double>()).epsilon(1e-14));
    CHECK(r.bounds.upper == doctest::Approx(j["upper"].get<double>()).epsilon(1e-14));
    CHECK(r.oracle->neumann.extrapolated == doctest::Approx(j["neumann"].get<double>()).epsilon(1e-9));
    CHECK(r.oracle->dirichlet.extrapolated == doctest::Approx(j["dirichlet"].get<double>()).epsilon(1e-9));
    CHECK(r.verdict == j["verdict"].get<bool>());
}
