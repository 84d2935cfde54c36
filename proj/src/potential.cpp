#include "dilute1d/potential.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cerrno>
#include <cstdint>
#include <cstring>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "dilute1d/errors.hpp"

namespace dilute1d {

namespace {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void validate(const PotentialComponent& c) {
    std::visit(overloaded{
        [](const HardCoreBand& b) {
            if (!(b.inner >= 0.0) || !(b.outer >= b.inner) || !std::isfinite(b.outer))
                throw InvalidParameter("hard-core band needs 0 <= x1 <= x2 < inf");
        },
        [](const DeltaSpike& d) {
            if (!(d.location >= 0.0) || !std::isfinite(d.location))
                throw InvalidParameter("delta spike location must be finite and >= 0");
            if (!(d.strength > 0.0) || !std::isfinite(d.strength))
                throw InvalidParameter("delta spike strength must be finite and > 0");
        },
        [](const PiecewiseConstant& s) {
            if (s.breakpoints.size() < 2 || s.values.size() + 1 != s.breakpoints.size())
                throw InvalidParameter("steps need m+1 breakpoints for m values");
            if (s.breakpoints.front() != 0.0)
                throw InvalidParameter("steps must start at breakpoint 0");
            for (std::size_t k = 1; k < s.breakpoints.size(); ++k)
                if (!(s.breakpoints[k] > s.breakpoints[k - 1]) || !std::isfinite(s.breakpoints[k]))
                    throw InvalidParameter("step breakpoints must be strictly increasing");
            for (double v : s.values)
                if (!(v >= 0.0) || !std::isfinite(v))
                    throw InvalidParameter("step values must be finite and >= 0");
        },
    }, c);
}

int kind_rank(const PotentialComponent& c) { return static_cast<int>(c.index()); }

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_list(const std::vector<double>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += fmt(v[i]);
    }
    return out + "]";
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double parse_number(const std::string& s, int line) {
    double v = 0.0;
    auto t = trim(s);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
        throw ParseError(line, "expected a number, got '" + t + "'");
    return v;
}

std::vector<double> parse_list(const std::string& s, int line) {
    auto t = trim(s);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw ParseError(line, "expected a bracketed list like [0, 0.1]");
    std::vector<double> out;
    std::string body = t.substr(1, t.size() - 2);
    if (trim(body).empty()) return out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number(item, line));
    return out;
}

struct Section {
    std::string name;
    int line = 0;
    std::map<std::string, std::pair<std::string, int>> entries;
};

PotentialComponent build_component(const Section& s) {
    auto take = [&](const std::string& key) -> std::pair<std::string, int> {
        auto it = s.entries.find(key);
        if (it == s.entries.end())
            throw ParseError(s.line, "section [" + s.name + "] is missing key '" + key + "'");
        return it->second;
    };
    auto check_keys = [&](std::initializer_list<const char*> allowed) {
        for (const auto& [k, v] : s.entries) {
            if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }))
                throw ParseError(v.second, "unknown key '" + k + "' in [" + s.name + "]");
        }
    };

    if (s.name == "potential.delta") {
        check_keys({"x0", "strength"});
        auto [xs, xl] = take("x0");
        auto [hs, hl] = take("strength");
        double x0 = parse_number(xs, xl);
        double h = parse_number(hs, hl);
        if (x0 < 0.0) throw ParseError(xl, "delta location must be >= 0");
        if (!(h > 0.0)) throw ParseError(hl, "delta strength must be positive");
        return DeltaSpike{x0, h};
    }
    if (s.name == "potential.hardcore") {
        check_keys({"x1", "x2"});
        auto [as, al] = take("x1");
        auto [bs, bl] = take("x2");
        double x1 = parse_number(as, al);
        double x2 = parse_number(bs, bl);
        if (x1 < 0.0) throw ParseError(al, "hard-core inner radius must be >= 0");
        if (x2 < x1) throw ParseError(bl, "hard-core outer radius must be >= inner radius");
        return HardCoreBand{x1, x2};
    }
    if (s.name == "potential.steps") {
        check_keys({"breakpoints", "values"});
        auto [bs, bl] = take("breakpoints");
        auto [vs, vl] = take("values");
        PiecewiseConstant pc{parse_list(bs, bl), parse_list(vs, vl)};
        for (double v : pc.values)
            if (v < 0.0) throw ParseError(vl, "step values must be nonnegative");
        try {
            validate(pc);
        } catch (const InvalidParameter& e) {
            throw ParseError(bl, e.what());
        }
        return pc;
    }
    throw ParseError(s.line, "unknown section [" + s.name + "]");
}

}  // namespace

double outer_radius(const PotentialComponent& c) {
    return std::visit(overloaded{
        [](const HardCoreBand& b) { return b.outer; },
        [](const DeltaSpike& d) { return d.location; },
        [](const PiecewiseConstant& s) { return s.breakpoints.back(); },
    }, c);
}

Potential::Potential(std::vector<PotentialComponent> components) : components_(std::move(components)) {
    for (const auto& c : components_) {
        validate(c);
        range_ = std::max(range_, outer_radius(c));
    }
}

double Potential::regular_mass() const {
    double mass = 0.0;
    for (const auto& c : components_) {
        if (auto d = std::get_if<DeltaSpike>(&c)) {
            mass += d->location == 0.0 ? d->strength : 2.0 * d->strength;
        } else if (auto s = std::get_if<PiecewiseConstant>(&c)) {
            for (std::size_t k = 0; k < s->values.size(); ++k)
                mass += 2.0 * s->values[k] * (s->breakpoints[k + 1] - s->breakpoints[k]);
        }
    }
    return mass;
}

bool Potential::is_impenetrable() const {
    return std::any_of(components_.begin(), components_.end(), [](const auto& c) {
        auto b = std::get_if<HardCoreBand>(&c);
        return b && b->inner == 0.0;
    });
}

bool Potential::is_free() const {
    return std::all_of(components_.begin(), components_.end(), [](const auto& c) {
        auto s = std::get_if<PiecewiseConstant>(&c);
        return s && std::all_of(s->values.begin(), s->values.end(), [](double v) { return v == 0.0; });
    });
}

double Potential::regular_value(double x) const {
    const double r = std::abs(x);
    double v = 0.0;
    for (const auto& c : components_) {
        auto s = std::get_if<PiecewiseConstant>(&c);
        if (!s || r >= s->breakpoints.back()) continue;
        auto it = std::upper_bound(s->breakpoints.begin(), s->breakpoints.end(), r);
        v += s->values[static_cast<std::size_t>(it - s->breakpoints.begin()) - 1];
    }
    return v;
}

double Potential::spike_strength_at(double x0) const {
    double h = 0.0;
    for (const auto& c : components_)
        if (auto d = std::get_if<DeltaSpike>(&c); d && d->location == x0) h += d->strength;
    return h;
}

double Potential::hard_core_edge() const {
    double edge = -1.0;
    for (const auto& c : components_)
        if (auto b = std::get_if<HardCoreBand>(&c)) edge = std::max(edge, b->outer);
    return edge;
}

Potential Potential::with(PotentialComponent c) const {
    auto comps = components_;
    comps.push_back(std::move(c));
    return Potential(std::move(comps));
}

Potential Potential::canonical() const {
    auto comps = components_;
    std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
        if (kind_rank(a) != kind_rank(b)) return kind_rank(a) < kind_rank(b);
        return to_config(Potential({a})) < to_config(Potential({b}));
    });
    return Potential(std::move(comps));
}

std::string Potential::digest() const {
    // FNV-1a over the canonical text.
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : to_config(canonical())) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Potential make_lieb_liniger(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw InvalidParameter("Lieb-Liniger coupling c must be > 0");
    return Potential({DeltaSpike{0.0, 2.0 * c}});
}

Potential make_hard_core(double diameter) {
    if (!(diameter > 0.0) || !std::isfinite(diameter))
        throw InvalidParameter("hard-core diameter must be > 0");
    return Potential({HardCoreBand{0.0, diameter}});
}

Potential make_square_barrier(double height, double radius) {
    if (!(radius > 0.0)) throw InvalidParameter("barrier radius must be > 0");
    if (!(height >= 0.0)) throw InvalidParameter("barrier height must be >= 0");
    return Potential({PiecewiseConstant{{0.0, radius}, {height}}});
}

Potential parse_potential(const std::string& text) {
    std::vector<Section> sections;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError(line_no, "unterminated section header");
            sections.push_back(Section{trim(line.substr(1, line.size() - 2)), line_no, {}});
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, "expected key = value");
        if (sections.empty()) throw ParseError(line_no, "key outside of any section");
        std::string key = trim(line.substr(0, eq));
        auto& entries = sections.back().entries;
        if (entries.count(key)) throw ParseError(line_no, "duplicate key '" + key + "'");
        entries[key] = {line.substr(eq + 1), line_no};
    }
    std::vector<PotentialComponent> comps;
    for (const auto& s : sections) {
        if (s.name.rfind("potential.", 0) != 0 && s.name != "potential") continue;
        if (s.name == "potential") {
            if (!s.entries.empty()) throw ParseError(s.line, "[potential] takes no keys");
            continue;
        }
        comps.push_back(build_component(s));
    }
    return Potential(std::move(comps));
}

Potential load_potential(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError(path + ": " + std::strerror(errno));
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_potential(ss.str());
}

std::string to_config(const Potential& p) {
    std::string out;
    for (const auto& c : p.components()) {
        if (!out.empty()) out += "\n";
        std::visit(overloaded{
            [&](const HardCoreBand& b) {
                out += "[potential.hardcore]\nx1 = " + fmt(b.inner) + "\nx2 = " + fmt(b.outer) + "\n";
            },
            [&](const DeltaSpike& d) {
                out += "[potential.delta]\nx0 = " + fmt(d.location) + "\nstrength = " + fmt(d.strength) + "\n";
            },
            [&](const PiecewiseConstant& s) {
                out += "[potential.steps]\nbreakpoints = " + fmt_list(s.breakpoints) +
                       "\nvalues = " + fmt_list(s.values) + "\n";
            },
        }, c);
    }
    return out;
}

}  // namespace dilute1d
