#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dilute1d/free_fermi.hpp"
#include "dilute1d/potential.hpp"
#include "dilute1d/scattering.hpp"

namespace dilute1d {

/// Psi_omega: the free Fermi state with the closest pair's short-distance
/// behaviour replaced by the even-channel scattering solution,
///   Psi = Phi(R(x)) |Psi_F(x)|,  Phi(r) = b f0(r) / r for r < b, 1 otherwise,
/// where R(x) is the smallest interparticle distance and f0 is normalised
/// to f0(b) = 1. For v = 0, Phi = 1.
class TrialState {
public:
    int particles() const noexcept { return ensemble_.particles(); }
    double length() const noexcept { return ensemble_.length(); }
    double healing() const noexcept { return b_; }
    const Potential& potential() const noexcept { return potential_; }
    const std::optional<ScatteringResult>& scattering() const noexcept { return scattering_; }
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    /// N = 3 evaluations are outside the validated range.
    bool experimental() const noexcept { return particles() == 3; }

    /// Psi at a point of [0, L]^N (any order).
    double value(std::span<const double> x) const;

    /// Psi and its gradient at a sorted point with distinct coordinates.
    double value_and_gradient(std::span<const double> sorted, std::span<double> grad) const;

    /// Phi(r) and Phi'(r).
    double profile(double r) const;
    double profile_slope(double r) const;

    /// Psi on the contact set where particles i and i+1 (sorted) coincide.
    double contact_value(std::span<const double> sorted, int i) const;

private:
    friend TrialState build_trial(int n, double length, const Potential& p, double b);
    TrialState(FermiEnsemble e, Potential p, double b) : ensemble_(e), potential_(std::move(p)), b_(b) {}

    FermiEnsemble ensemble_;
    Potential potential_;
    double b_;
    std::optional<ScatteringResult> scattering_;
    std::vector<std::string> warnings_;
};

/// Throws InvalidScale for b <= R0 and InvalidParameter for N outside {2, 3}.
TrialState build_trial(int n, double length, const Potential& p, double b);

struct TrialEnergy {
    double energy = 0.0;
    double kinetic = 0.0;     // unnormalised
    double potential = 0.0;   // unnormalised, deltas included
    double norm = 0.0;        // ||Psi||^2
    double relative_change = 0.0;  // |E(m) - E(2m)| / |E(2m)|
    int order = 0;
};

/// Energy functional of the trial state by composite Gauss-Legendre
/// quadrature over the ordered sector, split at b, at every potential
/// feature and at the closest-pair switch. Delta spikes are exact line or
/// surface integrals, hard cores contribute nothing. Evaluates at order m
/// and 2m and throws AccuracyError when they differ by more than 1e-6.
TrialEnergy trial_energy(const TrialState& t, int order = 64);

/// Healing length used in the proof: max(rho^{-1/5} |a|^{4/5}, R0).
double theorem_healing_length(int n, double length, const Potential& p);

/// N pi^2/3 rho^2 (1 + 2 rho a b/(b-a) + C_U [((rho|a|)^{6/5} + (rho R0)^{3/2})
///   (1 + rho R0^2 int v_reg)^{1/2} + 1/N]) with b = theorem_healing_length.
double upper_bound_theorem(int n, double length, const Potential& p, double c_upper = 1.0);

}  // namespace dilute1d
