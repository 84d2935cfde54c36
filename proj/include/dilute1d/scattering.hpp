#pragma once

#include <optional>
#include <vector>

#include "dilute1d/potential.hpp"

namespace dilute1d {

enum class Channel { Even, Odd };

const char* to_string(Channel c);

/// One piece of the zero-energy scattering solution on [left, right] of the
/// half line. On a segment with constant v = 2 k^2 the solution is
///   f(x) = grow * exp(k (x - right)) + decay * exp(-k (x - left)),
/// and for k == 0 it is linear with value f_left and slope slope_left.
/// Both exponentials are bounded by 1, so deep barriers do not overflow.
struct ScatteringSegment {
    double left = 0.0;
    double right = 0.0;
    double k = 0.0;
    double grow = 0.0;
    double decay = 0.0;
    double f_left = 0.0;
    double slope_left = 0.0;
    bool vanishing = false;  // inside a hard core

    double value(double x) const;
    double slope(double x) const;
};

/// Zero-energy two-body scattering solution on [-R, R], normalised to
/// f(R) = 1 (and f(-R) = +1 even / -1 odd).
class ScatteringResult {
public:
    Channel channel = Channel::Even;
    double radius = 0.0;
    Potential potential;
    /// Empty when v == 0 in the even channel (|a| is infinite).
    std::optional<double> scattering_length;
    std::vector<ScatteringSegment> segments;

    /// f0(x) for x in [-R, R].
    double value(double x) const;
    /// f0'(x) away from spikes; at a spike the right-hand limit on the half line.
    double slope(double x) const;

    /// 4 / (R - a), or 0 when a is undefined.
    double minimal_energy() const;

    /// n samples of (x, f0(x)) on [0, R] (always including x = R).
    std::vector<std::pair<double, double>> samples(int n) const;
};

/// Segment-by-segment exact solution of f'' = v f / 2 with f(R) = 1.
/// Throws InvalidRadius when R <= R0.
ScatteringResult solve_scattering(const Potential& p, Channel channel, double radius);

/// The functional int_{-R}^{R} 2|f'|^2 + v |f|^2 evaluated in closed form on
/// every segment, plus the delta spikes. Equals 4/(R-a) at the minimiser.
double scattering_energy(const ScatteringResult& r);

/// Piecewise-linear trial function through (x[i], y[i]) on [-R, R].
struct SampledFunction {
    std::vector<double> x;
    std::vector<double> y;
    double operator()(double t) const;
};

struct DysonCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

/// Exact functional of a piecewise-linear trial against 4/(R-a).
/// Throws InvalidTrial for bad end values, bad grids, or support on a hard core.
DysonCheck check_dyson_inequality(const ScatteringResult& r, const SampledFunction& trial,
                                  double tolerance = 1e-9);

/// Piecewise-linear sampling of f0 on [-R, R] with n points per side plus all
/// segment edges (useful as a near-minimal trial).
SampledFunction sample_solution(const ScatteringResult& r, int n);

}  // namespace dilute1d
