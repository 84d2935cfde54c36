// dilute1d: command line front end for the dilute 1D gas toolkit.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "acceptance.hpp"
#include "dilute1d/ed_oracle.hpp"
#include "dilute1d/errors.hpp"
#include "dilute1d/free_fermi.hpp"
#include "dilute1d/lieb_liniger.hpp"
#include "dilute1d/potential.hpp"
#include "dilute1d/report.hpp"
#include "dilute1d/scattering.hpp"
#include "dilute1d/sweep.hpp"
#include "dilute1d/trial_states.hpp"
#include "dilute1d/validator.hpp"

using namespace dilute1d;
using nlohmann::json;

namespace {

struct Global {
    std::string out_dir = ".";
    std::string format = "csv";
    int threads = 1;
    unsigned long long seed = 0x5EED;
};

// "1,10,100", "start:stop:count" (linear) or "start:stop:count:log".
std::vector<double> parse_values(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
        if (parts.size() < 3 || parts.size() > 4 || (parts.size() == 4 && parts[3] != "log"))
            throw InvalidParameter("range must be start:stop:count or start:stop:count:log");
        const double a = std::stod(parts[0]), b = std::stod(parts[1]);
        const int n = std::stoi(parts[2]);
        const bool log = parts.size() == 4;
        if (n < 1) throw InvalidParameter("range count must be >= 1");
        if (log && !(a > 0 && b > 0)) throw InvalidParameter("log range needs positive ends");
        for (int i = 0; i < n; ++i) {
            const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
            out.push_back(log ? a * std::pow(b / a, t) : a + (b - a) * t);
        }
        return out;
    }
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');)
        if (!p.empty()) out.push_back(std::stod(p));
    if (out.empty()) throw InvalidParameter("empty value list");
    return out;
}

std::string output_path(const Global& g, const std::string& out, const std::string& fallback) {
    const std::filesystem::path p = out.empty() ? std::filesystem::path(fallback) : std::filesystem::path(out);
    return (p.is_absolute() ? p : std::filesystem::path(g.out_dir) / p).string();
}

void emit_table(const Global& g, const Table& t, const std::string& out, const std::string& stem) {
    const std::string path = output_path(g, out, stem + "." + g.format);
    const bool as_json = out.empty() ? g.format == "json" : std::filesystem::path(out).extension() == ".json";
    write_text(path, as_json ? to_json(t).dump(2) + "\n" : to_csv(t));
    std::cout << "wrote " << path << "\n";
}

void emit_json(const Global& g, const json& j, const std::string& out, const std::string& stem) {
    const std::string path = output_path(g, out, stem + ".json");
    write_text(path, j.dump(2) + "\n");
    std::cout << "wrote " << path << "\n";
}

Potential potential_from(const std::string& config) {
    return config.empty() ? Potential{} : load_potential(config);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dilute one-dimensional Bose and Fermi gases: scattering lengths, Lieb-Liniger, "
                 "free fermions, exact diagonalisation, trial states and expansion checks"};
    app.require_subcommand(1);
    Global g;
    app.add_option("--out-dir", g.out_dir, "Directory for output files")->capture_default_str();
    app.add_option("--format", g.format, "Table format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for randomised sampling")->capture_default_str();

    bool verdict = true;

    // scatter
    auto* scatter = app.add_subcommand("scatter", "Zero-energy two-body scattering solution");
    std::string sc_config, sc_channel = "even", sc_out;
    double sc_radius = 0.0;
    int sc_samples = 101;
    scatter->add_option("--config", sc_config, "Potential config file")->required();
    scatter->add_option("--channel", sc_channel)->check(CLI::IsMember({"even", "odd"}));
    scatter->add_option("--radius", sc_radius, "R (default 2 R0, or 1 for R0 = 0)");
    scatter->add_option("--samples", sc_samples, "f0 samples on [0, R]")->check(CLI::NonNegativeNumber);
    scatter->add_option("--out", sc_out);
    scatter->callback([&] {
        const Potential p = load_potential(sc_config);
        const double R = sc_radius > 0 ? sc_radius : (p.range() > 0 ? 2.0 * p.range() : 1.0);
        const ScatteringResult r = solve_scattering(p, sc_channel == "odd" ? Channel::Odd : Channel::Even, R);
        if (r.scattering_length)
            std::cout << "a = " << format_number(*r.scattering_length) << "\n";
        else
            std::cout << "a undefined (v = 0)\n";
        emit_json(g, to_json(r, sc_samples), sc_out, "scatter");
    });

    // ll-solve
    auto* ll = app.add_subcommand("ll-solve", "Lieb-Liniger ground state e(gamma)");
    std::string ll_gamma, ll_out;
    int ll_nodes = kDefaultLLNodes;
    ll->add_option("--gamma", ll_gamma, "List a,b,c or range start:stop:count[:log]")->required();
    ll->add_option("--nodes", ll_nodes)->check(CLI::Range(8, 4000));
    ll->add_option("--out", ll_out);
    ll->callback([&] {
        SweepSpec spec;
        spec.kind = "gamma";
        spec.values = parse_values(ll_gamma);
        spec.ll_nodes = ll_nodes;
        spec.threads = g.threads;
        const Table t = run_sweep(spec);
        for (const auto& row : t.rows) {
            const double e = std::get<double>(row[2]), lb = std::get<double>(row[3]);
            if (e < lb - 1e-9) verdict = false;
        }
        emit_table(g, t, ll_out, "ll_solve");
    });

    // fermi
    auto* fermi = app.add_subcommand("fermi", "Free Fermi ground state: energy and densities");
    int fe_n = 2, fe_grid = 0;
    double fe_len = 1.0;
    std::string fe_out;
    fermi->add_option("--N", fe_n)->required()->check(CLI::PositiveNumber);
    fermi->add_option("--L", fe_len)->required()->check(CLI::PositiveNumber);
    fermi->add_option("--rdm2-grid", fe_grid, "Points per axis for rho2 samples")->check(CLI::NonNegativeNumber);
    fermi->add_option("--out", fe_out);
    fermi->callback([&] {
        const FermiEnsemble e(fe_n, fe_len);
        Table t;
        t.columns = {"quantity", "x1", "x2", "x3", "value"};
        const double nan = std::nan("");
        t.rows.push_back({std::string("energy"), nan, nan, nan, dirichlet_energy(e)});
        const int m = std::max(fe_grid, 2);
        for (int i = 0; i < m; ++i) {
            const double x = fe_len * (i + 0.5) / m;
            t.rows.push_back({std::string("rho1"), x, nan, nan, rho1(e, x)});
        }
        for (int i = 0; i < fe_grid; ++i)
            for (int j = 0; j < fe_grid; ++j) {
                const double x1 = fe_len * (i + 0.5) / fe_grid, x2 = fe_len * (j + 0.5) / fe_grid;
                t.rows.push_back({std::string("rho2"), x1, x2, nan, rho2(e, x1, x2)});
            }
        const double rho = e.density();
        t.rows.push_back({std::string("near_diagonal_coefficient"), fe_len / 2, nan, nan,
                          near_diagonal_coefficient(e, fe_len / 2, 1e-4 / rho, 1e-2 / rho)});
        if (fe_n >= 3) {
            std::mt19937_64 rng(g.seed);
            std::uniform_real_distribution<double> u(0.0, fe_len);
            for (int k = 0; k < 8; ++k) {
                const double a = u(rng), b = u(rng), c = u(rng);
                t.rows.push_back({std::string("rho3"), a, b, c, rho3(e, a, b, c)});
            }
        }
        emit_table(g, t, fe_out, "fermi");
    });

    // oracle
    auto* orc = app.add_subcommand("oracle", "Finite-difference ground energy for N <= 3");
    OracleProblem op;
    std::string or_bc = "dirichlet", or_stat = "bose", or_config, or_out;
    int or_refine = 3;
    orc->add_option("--N", op.particles)->required()->check(CLI::Range(1, 3));
    orc->add_option("--L", op.length)->required()->check(CLI::PositiveNumber);
    orc->add_option("--bc", or_bc)->check(CLI::IsMember({"neumann", "dirichlet"}));
    orc->add_option("--statistics", or_stat)->check(CLI::IsMember({"bose", "fermi"}));
    orc->add_option("--config", or_config, "Potential config (default free)");
    orc->add_option("--cells", op.cells, "Cells per dimension on the finest grid");
    orc->add_option("--refine", or_refine, "Number of grids");
    orc->add_option("--out", or_out);
    orc->callback([&] {
        op.boundary = parse_boundary(or_bc);
        op.statistics = or_stat == "fermi" ? Statistics::Fermi : Statistics::Bose;
        op.potential = potential_from(or_config);
        const SpectralResult r = ground_energy(op, or_refine);
        std::cout << "E = " << format_number(r.extrapolated) << " +- " << format_number(r.error) << "\n";
        json j = to_json(r);
        j["particles"] = op.particles;
        j["length"] = op.length;
        j["boundary"] = to_string(op.boundary);
        j["statistics"] = to_string(op.statistics);
        j["potential_digest"] = op.potential.digest();
        emit_json(g, j, or_out, "oracle");
    });

    // trial
    auto* tr = app.add_subcommand("trial", "Energy of the scattering-corrected Fermi trial state");
    int tr_n = 2, tr_order = 64;
    double tr_len = 1.0;
    std::string tr_b = "auto", tr_config, tr_out;
    tr->add_option("--N", tr_n)->check(CLI::Range(2, 3));
    tr->add_option("--L", tr_len)->required()->check(CLI::PositiveNumber);
    tr->add_option("--config", tr_config, "Potential config (default free)");
    tr->add_option("--b", tr_b, "Healing length or 'auto'");
    tr->add_option("--order", tr_order, "Quadrature order")->check(CLI::Range(64, 4096));
    tr->add_option("--out", tr_out);
    tr->callback([&] {
        const Potential p = potential_from(tr_config);
        const double b = tr_b == "auto" ? theorem_healing_length(tr_n, tr_len, p) : std::stod(tr_b);
        const TrialState t = build_trial(tr_n, tr_len, p, b);
        for (const auto& w : t.warnings()) std::cerr << "warning: " << w << "\n";
        const TrialEnergy e = trial_energy(t, tr_order);
        std::cout << "E_trial = " << format_number(e.energy) << "\n";
        emit_json(g, to_json(t, e), tr_out, "trial");
    });

    // validate
    auto* va = app.add_subcommand("validate", "Expansion, envelope and optional oracle comparison");
    int va_n = 2;
    double va_len = 40.0, va_c = 0.0, va_kappa = 0.0, va_cu = 1.0, va_cl = 1.0;
    std::string va_sym = "bose", va_config, va_out;
    OracleSettings va_oracle;
    va->add_option("--N", va_n)->required()->check(CLI::PositiveNumber);
    va->add_option("--L", va_len)->required()->check(CLI::PositiveNumber);
    va->add_option("--config", va_config, "Potential config (default free)");
    va->add_option("--symmetry", va_sym)->check(CLI::IsMember({"bose", "fermi", "anyon"}));
    va->add_option("--kappa", va_kappa, "Anyon angle in [0, pi]");
    va->add_option("--coupling", va_c, "Contact coupling c (adds 2c delta_0)");
    va->add_flag("--oracle", va_oracle.enabled, "Run the oracle under both boundary conditions");
    va->add_option("--cells", va_oracle.cells);
    va->add_option("--refine", va_oracle.refinements);
    va->add_option("--c-upper", va_cu, "Upper envelope constant")->check(CLI::NonNegativeNumber);
    va->add_option("--c-lower", va_cl, "Lower envelope constant")->check(CLI::NonNegativeNumber);
    va->add_option("--out", va_out);
    va->callback([&] {
        const ExpansionReport r = validate(va_n, va_len, potential_from(va_config), parse_symmetry(va_sym, va_kappa),
                                           va_c, va_oracle, va_cu, va_cl);
        for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
        std::cout << "expansion = " << format_number(r.bounds.expansion) << " in [" << format_number(r.bounds.lower)
                  << ", " << format_number(r.bounds.upper) << "], verdict " << (r.verdict ? "pass" : "fail") << "\n";
        verdict = verdict && r.verdict;
        emit_json(g, to_json(r), va_out, "validate");
    });

    // sweep
    auto* sw = app.add_subcommand("sweep", "Parameter sweep over gamma, kappa or coupling");
    SweepSpec sw_spec;
    std::string sw_values, sw_config, sw_sym = "bose";
    double sw_kappa = 0.0;
    sw->add_option("--kind", sw_spec.kind)->required()->check(CLI::IsMember({"gamma", "kappa", "coupling"}));
    sw->add_option("--values", sw_values, "List a,b,c or range start:stop:count[:log]")->required();
    sw->add_option("--coupling", sw_spec.coupling, "Fixed coupling for kappa sweeps");
    sw->add_option("--N", sw_spec.particles);
    sw->add_option("--L", sw_spec.length);
    sw->add_option("--config", sw_config, "Base potential config (default free)");
    sw->add_option("--symmetry", sw_sym)->check(CLI::IsMember({"bose", "fermi", "anyon"}));
    sw->add_option("--kappa", sw_kappa);
    sw->add_option("--nodes", sw_spec.ll_nodes);
    sw->callback([&] {
        sw_spec.values = parse_values(sw_values);
        sw_spec.base = potential_from(sw_config);
        sw_spec.symmetry = parse_symmetry(sw_sym, sw_kappa);
        sw_spec.threads = g.threads;
        const Table t = run_sweep(sw_spec);
        if (sw_spec.kind == "coupling")
            for (const auto& row : t.rows) verdict = verdict && std::get<std::string>(row.back()) == "pass";
        const std::string path = (std::filesystem::path(g.out_dir) / sweep_file_name(sw_spec, g.format)).string();
        write_text(path, g.format == "json" ? to_json(t).dump(2) + "\n" : to_csv(t));
        std::cout << "wrote " << path << "\n";
    });

    // acceptance
    auto* ac = app.add_subcommand("acceptance", "Run the acceptance criteria");
    std::vector<int> ac_only;
    std::string ac_out;
    ac->add_option("--only", ac_only, "Criterion ids (default all)")->check(CLI::Range(1, acceptance::kCriteria));
    ac->add_option("--out", ac_out, "Also write a JSON summary");
    ac->callback([&] {
        if (ac_only.empty())
            for (int i = 1; i <= acceptance::kCriteria; ++i) ac_only.push_back(i);
        json summary = json::array();
        for (int id : ac_only) {
            const auto r = acceptance::run_criterion(id);
            std::cout << acceptance::format_line(r) << std::endl;
            verdict = verdict && r.passed;
            summary.push_back({{"id", r.id},
                               {"title", r.title},
                               {"passed", r.passed},
                               {"seconds", r.seconds},
                               {"target_seconds", r.target_seconds},
                               {"detail", r.detail}});
        }
        if (!ac_out.empty()) emit_json(g, summary, ac_out, "acceptance");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: bad number: " << e.what() << "\n";
        return 2;
    }
    return verdict ? 0 : 1;
}
