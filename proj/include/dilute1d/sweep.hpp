#pragma once

#include <string>
#include <vector>

#include "dilute1d/potential.hpp"
#include "dilute1d/report.hpp"
#include "dilute1d/validator.hpp"

namespace dilute1d {

/// A one-parameter sweep.
///   gamma:    Lieb-Liniger e(gamma), bound, expansion and gamma^3 residual (NaN below 5)
///   kappa:    anyon angle at fixed coupling: effective coupling and a_kappa
///   coupling: validate() without oracle over contact couplings c
struct SweepSpec {
    std::string kind;
    std::vector<double> values;
    double coupling = 1.0;
    int particles = 2;
    double length = 40.0;
    Potential base;
    Symmetry symmetry;
    int ll_nodes = kDefaultLLNodes;
    int threads = 1;
};

/// Runs every point, in parallel over `threads` workers; rows keep the
/// order of `values`. The first failing point's error is rethrown.
Table run_sweep(const SweepSpec& spec);

/// "sweep_<kind>.<csv|json>".
std::string sweep_file_name(const SweepSpec& spec, const std::string& format);

}  // namespace dilute1d
