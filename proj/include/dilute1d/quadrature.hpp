#pragma once

#include <span>
#include <vector>

namespace dilute1d {

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int size() const { return static_cast<int>(nodes.size()); }
};

/// Newton iteration on the three-term Legendre recurrence; accurate to a few
/// ulps for n up to several thousand.
GaussRule gauss_legendre(int n);

template <class F>
double integrate(const GaussRule& rule, double a, double b, F&& f) {
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    double sum = 0.0;
    for (int i = 0; i < rule.size(); ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

/// Composite rule over [a, b] split at the given interior breakpoints, with
/// each panel further divided into `subdivide` equal pieces.
template <class F>
double integrate_panels(const GaussRule& rule, double a, double b, std::span<const double> breaks,
                        int subdivide, F&& f) {
    std::vector<double> edges{a};
    for (double t : breaks)
        if (t > a && t < b) edges.push_back(t);
    edges.push_back(b);
    double total = 0.0;
    for (std::size_t i = 1; i < edges.size(); ++i) {
        const double lo = edges[i - 1], hi = edges[i];
        if (!(hi > lo)) continue;
        const double step = (hi - lo) / subdivide;
        for (int j = 0; j < subdivide; ++j) total += integrate(rule, lo + j * step, lo + (j + 1) * step, f);
    }
    return total;
}

/// Sum with a fixed pairwise tree; the result does not depend on how the
/// caller splits work as long as the input order is the same.
double pairwise_sum(std::span<const double> values);

}  // namespace dilute1d
