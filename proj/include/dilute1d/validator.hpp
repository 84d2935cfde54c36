#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dilute1d/ed_oracle.hpp"
#include "dilute1d/potential.hpp"
#include "dilute1d/scattering.hpp"

namespace dilute1d {

enum class SymmetryKind { Bose, Fermi, Anyon };

struct Symmetry {
    SymmetryKind kind = SymmetryKind::Bose;
    double kappa = 0.0;  // statistical angle, used for Anyon only

    static Symmetry bose() { return {SymmetryKind::Bose, 0.0}; }
    static Symmetry fermi() { return {SymmetryKind::Fermi, 0.0}; }
    static Symmetry anyon(double kappa) { return {SymmetryKind::Anyon, kappa}; }
};

std::string to_string(const Symmetry& s);
Symmetry parse_symmetry(const std::string& kind, double kappa);

/// The bosonic problem equivalent to (symmetry, contact coupling c, v).
struct SymmetryMap {
    Symmetry symmetry;
    double coupling = 0.0;
    Potential effective;
    bool impenetrable = false;
    double effective_coupling = 0.0;  // strength / 2 of the added contact delta
};

/// Bose: v + 2c delta_0. Anyon(kappa < pi): v + 2c/cos(kappa/2) delta_0, and v
/// must carry no delta at contact of its own. Fermi and Anyon(pi): v plus an
/// impenetrable point at contact. The result is in canonical order, so equal
/// physics gives bitwise-equal potentials.
SymmetryMap map_symmetry(const Symmetry& s, double c, const Potential& p);

/// N pi^2/3 rho^2 (1 + 2 rho a).
double expansion_energy(int n, double length, double a);

struct Envelope {
    double leading = 0.0;        // N pi^2/3 rho^2
    double first_order = 0.0;    // 2 rho a
    double expansion = 0.0;
    double term_a = 0.0;         // (rho|a|)^{6/5}
    double term_range = 0.0;     // (rho R0)^{6/5}
    double term_size = 0.0;      // N^{-2/3}
    double c_upper = 1.0;
    double c_lower = 1.0;
    double lower = 0.0;
    double upper = 0.0;
};

Envelope envelope(int n, double length, double a, double range, double c_upper = 1.0, double c_lower = 1.0);

struct OracleSettings {
    bool enabled = false;
    int cells = 256;
    int refinements = 3;
};

struct OracleEnergies {
    SpectralResult neumann;
    SpectralResult dirichlet;
};

struct ExpansionReport {
    int particles = 0;
    double length = 0.0;
    double density = 0.0;
    Symmetry symmetry;
    double coupling = 0.0;
    std::string input_digest;
    std::string effective_digest;
    std::string effective_config;
    bool impenetrable = false;
    double scattering_length = 0.0;
    double range = 0.0;
    Envelope bounds;
    std::optional<OracleEnergies> oracle;
    // Filled when the oracle ran.
    bool neumann_below_upper = false;
    bool dirichlet_above_lower = false;
    bool ordered = false;
    bool first_order_helps = false;   // for both boundary conditions
    bool verdict = false;
    std::vector<std::string> warnings;
};

/// map_symmetry -> solve_scattering -> expansion_energy -> optional oracle.
/// Without the oracle the verdict is the envelope ordering alone.
ExpansionReport validate(int n, double length, const Potential& p, const Symmetry& s, double c,
                         const OracleSettings& oracle = {}, double c_upper = 1.0, double c_lower = 1.0);

/// True when two reports describe the same bosonic problem with identical
/// numbers (the input symmetry label may differ).
bool same_physics(const ExpansionReport& a, const ExpansionReport& b);

}  // namespace dilute1d
