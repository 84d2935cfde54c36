#include "dilute1d/validator.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>
#include <sstream>

#include "dilute1d/errors.hpp"

namespace dilute1d {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kWarnThreshold = 0.2;

bool bits_equal(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

bool same_grids(const SpectralResult& a, const SpectralResult& b) {
    if (a.grids.size() != b.grids.size()) return false;
    for (std::size_t i = 0; i < a.grids.size(); ++i)
        for (std::size_t k = 0; k < 3; ++k) {
            const double x = a.grids[i].lowest[k], y = b.grids[i].lowest[k];
            if (!(bits_equal(x, y) || (std::isnan(x) && std::isnan(y)))) return false;
        }
    return bits_equal(a.extrapolated, b.extrapolated) && bits_equal(a.error, b.error);
}

}  // namespace

std::string to_string(const Symmetry& s) {
    switch (s.kind) {
        case SymmetryKind::Bose: return "bose";
        case SymmetryKind::Fermi: return "fermi";
        case SymmetryKind::Anyon: {
            std::ostringstream o;
            o.precision(17);
            o << "anyon(" << s.kappa << ")";
            return o.str();
        }
    }
    return "?";
}

Symmetry parse_symmetry(const std::string& kind, double kappa) {
    if (kind == "bose") return Symmetry::bose();
    if (kind == "fermi") return Symmetry::fermi();
    if (kind == "anyon") return Symmetry::anyon(kappa);
    throw InvalidParameter("symmetry must be bose, fermi or anyon, got '" + kind + "'");
}

SymmetryMap map_symmetry(const Symmetry& s, double c, const Potential& p) {
    if (!(c >= 0.0) || !std::isfinite(c)) throw InvalidParameter("contact coupling c must be >= 0");
    SymmetryMap m;
    m.symmetry = s;
    m.coupling = c;

    bool impenetrable = s.kind == SymmetryKind::Fermi;
    double coupling = c;
    if (s.kind == SymmetryKind::Anyon) {
        if (!(s.kappa >= 0.0 && s.kappa <= kPi)) throw InvalidParameter("anyon angle kappa must lie in [0, pi]");
        if (p.spike_strength_at(0.0) != 0.0)
            throw InvalidParameter("anyon mapping needs v without its own delta at contact");
        if (s.kappa == kPi) {
            impenetrable = true;
        } else {
            coupling = c / std::cos(0.5 * s.kappa);
        }
    }

    Potential eff = p;
    if (impenetrable) {
        if (!p.is_impenetrable()) eff = eff.with(HardCoreBand{0.0, 0.0});
        m.impenetrable = true;
        m.effective_coupling = std::numeric_limits<double>::infinity();
    } else {
        if (coupling > 0.0) eff = eff.with(DeltaSpike{0.0, 2.0 * coupling});
        m.impenetrable = eff.is_impenetrable();
        m.effective_coupling = coupling;
    }
    m.effective = eff.canonical();
    return m;
}

double expansion_energy(int n, double length, double a) {
    if (n < 1 || !(length > 0.0)) throw InvalidParameter("need N >= 1 and L > 0");
    const double rho = n / length;
    return n * kPi * kPi / 3.0 * rho * rho * (1.0 + 2.0 * rho * a);
}

Envelope envelope(int n, double length, double a, double range, double c_upper, double c_lower) {
    if (!(c_upper >= 0.0) || !(c_lower >= 0.0)) throw InvalidParameter("envelope constants must be >= 0");
    const double rho = n / length;
    Envelope e;
    e.leading = n * kPi * kPi / 3.0 * rho * rho;
    e.first_order = 2.0 * rho * a;
    e.expansion = expansion_energy(n, length, a);
    e.term_a = std::pow(rho * std::abs(a), 1.2);
    e.term_range = std::pow(rho * range, 1.2);
    e.term_size = std::pow(static_cast<double>(n), -2.0 / 3.0);
    e.c_upper = c_upper;
    e.c_lower = c_lower;
    const double spread = e.leading * (e.term_a + e.term_range + e.term_size);
    e.upper = e.expansion + c_upper * spread;
    e.lower = e.expansion - c_lower * spread;
    return e;
}

ExpansionReport validate(int n, double length, const Potential& p, const Symmetry& s, double c,
                         const OracleSettings& oracle, double c_upper, double c_lower) {
    if (n < 1 || !(length > 0.0)) throw InvalidParameter("need N >= 1 and L > 0");
    const SymmetryMap m = map_symmetry(s, c, p);

    ExpansionReport r;
    r.particles = n;
    r.length = length;
    r.density = n / length;
    r.symmetry = s;
    r.coupling = c;
    r.input_digest = p.canonical().digest();
    r.effective_digest = m.effective.digest();
    r.effective_config = to_config(m.effective);
    r.impenetrable = m.impenetrable;
    r.range = m.effective.range();

    const double radius = r.range > 0.0 ? 2.0 * r.range : 1.0;
    const ScatteringResult sc = solve_scattering(m.effective, Channel::Even, radius);
    if (!sc.scattering_length) throw InvalidParameter("scattering length is undefined for v = 0 without contact coupling");
    r.scattering_length = *sc.scattering_length;
    r.bounds = envelope(n, length, r.scattering_length, r.range, c_upper, c_lower);
    if (r.density * std::abs(r.scattering_length) > kWarnThreshold)
        r.warnings.push_back("rho |a| exceeds 0.2: outside the dilute regime");
    if (r.density * r.range > kWarnThreshold) r.warnings.push_back("rho R0 exceeds 0.2: outside the dilute regime");

    const bool ordered_envelope = r.bounds.lower <= r.bounds.expansion && r.bounds.expansion <= r.bounds.upper;
    if (!oracle.enabled) {
        r.verdict = ordered_envelope;
        return r;
    }
    if (n > 3) throw InvalidParameter("oracle comparison needs N <= 3");

    OracleProblem prob{n, length, Boundary::Neumann, m.effective, Statistics::Bose, oracle.cells};
    OracleEnergies e;
    e.neumann = ground_energy(prob, oracle.refinements);
    prob.boundary = Boundary::Dirichlet;
    e.dirichlet = ground_energy(prob, oracle.refinements);

    const double en = e.neumann.extrapolated, ed = e.dirichlet.extrapolated;
    const double err = e.neumann.error + e.dirichlet.error;
    r.neumann_below_upper = en - e.neumann.error <= r.bounds.upper;
    r.dirichlet_above_lower = ed + e.dirichlet.error >= r.bounds.lower;
    r.ordered = en <= ed + err;
    auto helps = [&](double energy) {
        return std::abs(energy - r.bounds.expansion) < std::abs(energy - r.bounds.leading);
    };
    r.first_order_helps = helps(en) && helps(ed);
    r.verdict = ordered_envelope && r.neumann_below_upper && r.dirichlet_above_lower && r.ordered;
    r.oracle = std::move(e);
    return r;
}

bool same_physics(const ExpansionReport& a, const ExpansionReport& b) {
    if (a.particles != b.particles || !bits_equal(a.length, b.length)) return false;
    if (a.effective_digest != b.effective_digest || a.effective_config != b.effective_config) return false;
    if (!bits_equal(a.scattering_length, b.scattering_length) || !bits_equal(a.range, b.range)) return false;
    const Envelope &x = a.bounds, &y = b.bounds;
    if (!bits_equal(x.lower, y.lower) || !bits_equal(x.upper, y.upper) || !bits_equal(x.expansion, y.expansion))
        return false;
    if (a.oracle.has_value() != b.oracle.has_value()) return false;
    if (a.oracle && !(same_grids(a.oracle->neumann, b.oracle->neumann) && same_grids(a.oracle->dirichlet, b.oracle->dirichlet)))
        return false;
    return a.verdict == b.verdict;
}

}  // namespace dilute1d
