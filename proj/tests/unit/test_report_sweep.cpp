#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "dilute1d/errors.hpp"
#include "dilute1d/report.hpp"
#include "dilute1d/sweep.hpp"

using namespace dilute1d;

TEST_CASE("number formatting and tables") {
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(format_number(-INFINITY) == "-inf");
    Table t{{"a", "b", "c"}, {{1.5, 2LL, std::string("x")}}};
    CHECK(to_csv(t) == "a,b,c\n1.5,2,x\n");
    const auto j = to_json(t);
    CHECK(j[0]["a"].get<double>() == 1.5);
    CHECK(j[0]["c"].get<std::string>() == "x");
}

TEST_CASE("gamma sweep rows keep the input order") {
    SweepSpec s;
    s.kind = "gamma";
    s.values = {100.0, 1.0, 10.0};
    s.ll_nodes = 100;
    const Table t = run_sweep(s);
    REQUIRE(t.rows.size() == 3);
    CHECK(std::get<double>(t.rows[0][0]) == 100.0);
    CHECK(std::isnan(std::get<double>(t.rows[1][5])));
    CHECK(std::get<long long>(t.rows[2][6]) == 100);
    s.threads = 3;
    const Table u = run_sweep(s);
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::get<double>(u.rows[i][2]) == std::get<double>(t.rows[i][2]));
}

TEST_CASE("kappa sweep: a_kappa rises toward zero") {
    SweepSpec s;
    s.kind = "kappa";
    s.values = {0.0, std::numbers::pi / 4, std::numbers::pi / 2, 3 * std::numbers::pi / 4};
    s.coupling = 1.0;
    const Table t = run_sweep(s);
    double prev = -1e300;
    for (const auto& row : t.rows) {
        const double a = std::get<double>(row[3]);
        CHECK(a > prev);
        CHECK(a < 0.0);
        CHECK(a == doctest::Approx(-2.0 * std::cos(std::get<double>(row[0]) / 2)).epsilon(1e-12));
        prev = a;
    }
}

TEST_CASE("sweep names and errors") {
    SweepSpec s;
    s.kind = "coupling";
    s.values = {1.0, 5.0};
    CHECK(sweep_file_name(s, "csv") == "sweep_coupling.csv");
    CHECK(run_sweep(s).rows.size() == 2);
    CHECK_THROWS_AS(sweep_file_name(s, "xml"), InvalidParameter);
    s.kind = "rho";
    CHECK_THROWS_AS(run_sweep(s), InvalidParameter);
    s.kind = "gamma";
    s.values = {1.0, -1.0};
    CHECK_THROWS_AS(run_sweep(s), InvalidParameter);
}

TEST_CASE("write_text creates directories and reports failures") {
    const auto dir = std::filesystem::temp_directory_path() / "dilute1d_report_test";
    std::filesystem::remove_all(dir);
    write_text((dir / "a" / "b.txt").string(), "hello\n");
    std::ifstream f(dir / "a" / "b.txt");
    std::string line;
    std::getline(f, line);
    CHECK(line == "hello");
    CHECK_THROWS_AS(write_text((dir / "a" / "b.txt" / "c.txt").string(), "x"), IoError);
    std::filesystem::remove_all(dir);
}
