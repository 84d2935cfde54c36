#pragma once

#include <string>
#include <variant>
#include <vector>

namespace dilute1d {

// Infinite wall on |x| in [inner, outer]. inner == outer is an impenetrable
// point (zero boundary condition at |x| = inner).
struct HardCoreBand {
    double inner = 0.0;
    double outer = 0.0;
    bool operator==(const HardCoreBand&) const = default;
};

// strength * (delta_{-x0} + delta_{x0}) for x0 > 0, strength * delta_0 for x0 == 0.
struct DeltaSpike {
    double location = 0.0;
    double strength = 0.0;
    bool operator==(const DeltaSpike&) const = default;
};

// values[k] on |x| in [breakpoints[k], breakpoints[k+1]); breakpoints[0] == 0.
struct PiecewiseConstant {
    std::vector<double> breakpoints;
    std::vector<double> values;
    bool operator==(const PiecewiseConstant&) const = default;
};

using PotentialComponent = std::variant<HardCoreBand, DeltaSpike, PiecewiseConstant>;

double outer_radius(const PotentialComponent& c);

/// A symmetric, repulsive, finite-range pair interaction v = v_reg + v_hc,
/// stored as a list of exact components (never sampled). Immutable.
class Potential {
public:
    Potential() = default;
    explicit Potential(std::vector<PotentialComponent> components);

    const std::vector<PotentialComponent>& components() const noexcept { return components_; }

    /// Support radius R0: max outer radius over components (0 for no components).
    double range() const noexcept { return range_; }

    /// Integral of v_reg over the real line. Hard cores carry no mass.
    double regular_mass() const;

    /// True iff some hard-core band touches contact (inner radius 0).
    bool is_impenetrable() const;

    /// True iff v is identically zero as a measure.
    bool is_free() const;

    /// Sum of the piecewise-constant parts at |x| (delta spikes excluded).
    double regular_value(double x) const;

    /// Total delta strength located at |x| == x0 (exact match).
    double spike_strength_at(double x0) const;

    /// Outermost radius of any hard-core band, or -1 when there is none.
    double hard_core_edge() const;

    /// Returns a copy with one more component.
    Potential with(PotentialComponent c) const;

    /// Components sorted into a canonical order; equal potentials compare equal.
    Potential canonical() const;

    bool operator==(const Potential& other) const { return components_ == other.components_; }

    /// Short stable hash of the canonical config text.
    std::string digest() const;

private:
    std::vector<PotentialComponent> components_;
    double range_ = 0.0;
};

/// 2c * delta_0: the Lieb-Liniger contact interaction.
Potential make_lieb_liniger(double c);

/// Hard core of the given diameter: band [0, diameter].
Potential make_hard_core(double diameter);

/// Square barrier of the given height on |x| < radius.
Potential make_square_barrier(double height, double radius);

// Config text format:
//
//   # comment
//   [potential.delta]
//   x0 = 0.0
//   strength = 2.0
//
//   [potential.hardcore]
//   x1 = 0.0
//   x2 = 0.3
//
//   [potential.steps]
//   breakpoints = [0.0, 0.1, 0.25]
//   values = [5.0, 1.0]
//
// Sections may repeat; each opens a new component. Unknown keys and unknown
// potential.* sections are errors; sections outside the potential namespace
// are left for other readers. Errors carry the 1-based line number.
Potential parse_potential(const std::string& text);
Potential load_potential(const std::string& path);
std::string to_config(const Potential& p);

}  // namespace dilute1d
