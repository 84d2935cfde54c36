#include "dilute1d/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <system_error>

#include "dilute1d/errors.hpp"

namespace dilute1d {

using nlohmann::json;

namespace {

json number(double x) {
    if (std::isfinite(x)) return x;
    return format_number(x);  // JSON has no nan/inf literals
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

json grid_json(const GridEnergy& g) {
    json lowest = json::array();
    for (double e : g.lowest) lowest.push_back(number(e));
    return {{"cells", g.cells},           {"spacing", g.spacing},     {"sites", g.sites},
            {"lowest", lowest},           {"iterations", g.iterations}, {"residual", g.residual}};
}

}  // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string to_csv(const Table& t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + csv_escape(t.columns[i]);
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) out += format_number(v);
                    else if constexpr (std::is_same_v<T, long long>) out += std::to_string(v);
                    else out += csv_escape(v);
                },
                row[i]);
        }
        out += '\n';
    }
    return out;
}

json to_json(const Table& t) {
    json rows = json::array();
    for (const auto& row : t.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i)
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) obj[t.columns[i]] = number(v);
                    else obj[t.columns[i]] = v;
                },
                row[i]);
        rows.push_back(std::move(obj));
    }
    return rows;
}

json to_json(const ScatteringResult& r, int samples) {
    json j = {{"channel", to_string(r.channel)},
              {"radius", r.radius},
              {"potential_digest", r.potential.digest()},
              {"range", r.potential.range()}};
    if (r.scattering_length) {
        j["scattering_length"] = *r.scattering_length;
        j["minimal_energy"] = r.minimal_energy();
        j["energy"] = scattering_energy(r);
    } else {
        j["scattering_length"] = nullptr;
    }
    if (samples > 0) {
        json pts = json::array();
        for (const auto& [x, f] : r.samples(samples)) pts.push_back({x, f});
        j["samples"] = pts;
    }
    return j;
}

json to_json(const LLGroundState& s, bool with_density) {
    json j = {{"gamma", s.gamma},
              {"lambda", s.lambda},
              {"e", s.e},
              {"g_integral", s.g_integral},
              {"nodes", s.n_nodes},
              {"ill_conditioned", s.ill_conditioned},
              {"lower_bound", ll_lower_bound(s.gamma)},
              {"expansion", ll_expansion(s.gamma)}};
    if (with_density) {
        j["y"] = s.nodes;
        j["g"] = s.g;
    }
    return j;
}

json to_json(const SpectralResult& r) {
    json grids = json::array();
    for (const auto& g : r.grids) grids.push_back(grid_json(g));
    return {{"grids", grids}, {"extrapolated", r.extrapolated}, {"error", r.error}, {"order", r.order}};
}

json to_json(const TrialState& t, const TrialEnergy& e) {
    json j = {{"particles", t.particles()},
              {"length", t.length()},
              {"b", t.healing()},
              {"potential_digest", t.potential().digest()},
              {"energy", e.energy},
              {"kinetic", e.kinetic},
              {"potential_energy", e.potential},
              {"norm", e.norm},
              {"quadrature_order", e.order},
              {"relative_change", e.relative_change},
              {"experimental", t.experimental()},
              {"warnings", t.warnings()}};
    if (t.scattering() && t.scattering()->scattering_length) j["scattering_length"] = *t.scattering()->scattering_length;
    return j;
}

json to_json(const Envelope& e) {
    return {{"leading", e.leading},       {"first_order", e.first_order}, {"expansion", e.expansion},
            {"term_a", e.term_a},         {"term_range", e.term_range},   {"term_size", e.term_size},
            {"c_upper", e.c_upper},       {"c_lower", e.c_lower},         {"lower", e.lower},
            {"upper", e.upper}};
}

json to_json(const ExpansionReport& r) {
    json j = {{"particles", r.particles},
              {"length", r.length},
              {"density", r.density},
              {"symmetry", to_string(r.symmetry)},
              {"kappa", r.symmetry.kappa},
              {"coupling", r.coupling},
              {"input_digest", r.input_digest},
              {"effective_digest", r.effective_digest},
              {"impenetrable", r.impenetrable},
              {"scattering_length", r.scattering_length},
              {"range", r.range},
              {"envelope", to_json(r.bounds)},
              {"verdict", r.verdict ? "pass" : "fail"},
              {"warnings", r.warnings}};
    if (r.oracle) {
        j["oracle"] = {{"neumann", to_json(r.oracle->neumann)}, {"dirichlet", to_json(r.oracle->dirichlet)}};
        j["checks"] = {{"neumann_below_upper", r.neumann_below_upper},
                       {"dirichlet_above_lower", r.dirichlet_above_lower},
                       {"boundary_ordering", r.ordered},
                       {"first_order_helps", r.first_order_helps}};
    }
    return j;
}

json to_json(const RobinsonCheck& r) {
    return {{"lhs_dirichlet", r.lhs_dirichlet},
            {"rhs_neumann", r.rhs_neumann},
            {"slack", r.slack},
            {"error", r.error},
            {"holds", r.holds}};
}

void write_text(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    const fs::path p(path);
    std::error_code ec;
    if (p.has_parent_path()) {
        fs::create_directories(p.parent_path(), ec);
        if (ec) throw IoError(p.parent_path().string() + ": " + ec.message());
    }
    std::ofstream out(p, std::ios::binary);
    if (!out) throw IoError(path + ": " + std::error_code(errno, std::generic_category()).message());
    out << text;
    out.flush();
    if (!out) throw IoError(path + ": write failed");
}

}  // namespace dilute1d
