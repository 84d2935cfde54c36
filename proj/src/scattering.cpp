#include "dilute1d/scattering.hpp"

#include <algorithm>
#include <cmath>

#include "dilute1d/errors.hpp"
#include "dilute1d/quadrature.hpp"

namespace dilute1d {

namespace {

// Segments with k*T below this use the cosh/sinh form anchored at the left
// edge; above it the two-exponential form.
constexpr double kLocalFormLimit = 1.0;

bool local_form(const ScatteringSegment& s) {
    return s.k == 0.0 || s.k * (s.right - s.left) <= kLocalFormLimit;
}

// sinh(z)/z, accurate near zero.
double sinhc(double z) {
    if (std::abs(z) < 1e-4) return 1.0 + z * z / 6.0;
    return std::sinh(z) / z;
}

struct RawSegment {
    double left, right, k;
    double f_left, slope_left, scale_left;
    double f_right, slope_right, scale_right;
    bool vanishing;
};

}  // namespace

const char* to_string(Channel c) { return c == Channel::Even ? "even" : "odd"; }

double ScatteringSegment::value(double x) const {
    if (vanishing) return 0.0;
    if (local_form(*this)) {
        double t = x - left;
        return f_left * std::cosh(k * t) + slope_left * t * sinhc(k * t);
    }
    return grow * std::exp(k * (x - right)) + decay * std::exp(-k * (x - left));
}

double ScatteringSegment::slope(double x) const {
    if (vanishing) return 0.0;
    if (local_form(*this)) {
        double t = x - left;
        return f_left * k * std::sinh(k * t) + slope_left * std::cosh(k * t);
    }
    return k * (grow * std::exp(k * (x - right)) - decay * std::exp(-k * (x - left)));
}

namespace {

const ScatteringSegment& segment_at(const std::vector<ScatteringSegment>& segs, double r) {
    // Right-continuous lookup: a point on a shared edge belongs to the segment on its right.
    for (const auto& s : segs)
        if (r >= s.left && r < s.right) return s;
    return segs.back();
}

}  // namespace

double ScatteringResult::value(double x) const {
    double r = std::abs(x);
    double f = segment_at(segments, r).value(r);
    return (channel == Channel::Odd && x < 0.0) ? -f : f;
}

double ScatteringResult::slope(double x) const {
    double r = std::abs(x);
    double d = segment_at(segments, r).slope(r);
    // f is even (odd) so f' is odd (even).
    return (channel == Channel::Even && x < 0.0) ? -d : d;
}

double ScatteringResult::minimal_energy() const {
    if (!scattering_length) return 0.0;
    return 4.0 / (radius - *scattering_length);
}

std::vector<std::pair<double, double>> ScatteringResult::samples(int n) const {
    std::vector<std::pair<double, double>> out;
    n = std::max(n, 2);
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = radius * i / (n - 1);
        out.emplace_back(x, value(x));
    }
    return out;
}

ScatteringResult solve_scattering(const Potential& p, Channel channel, double radius) {
    if (!(radius > p.range()) || !std::isfinite(radius))
        throw InvalidRadius("scattering radius must exceed the potential range R0");

    ScatteringResult out;
    out.channel = channel;
    out.radius = radius;
    out.potential = p;

    // Initial data at the innermost admissible point.
    const double edge = p.hard_core_edge();
    double start = 0.0, f = 1.0, df = 0.0;
    if (edge >= 0.0) {
        start = edge;
        f = 0.0;
        df = 1.0;
    } else if (channel == Channel::Odd) {
        f = 0.0;
        df = 1.0;
    } else {
        df = p.spike_strength_at(0.0) / 4.0 * f;
    }

    std::vector<double> points{radius};
    for (const auto& c : p.components()) {
        if (auto s = std::get_if<PiecewiseConstant>(&c)) {
            for (double t : s->breakpoints)
                if (t > start && t < radius) points.push_back(t);
        } else if (auto d = std::get_if<DeltaSpike>(&c)) {
            if (d->location > start) points.push_back(d->location);
        }
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    std::vector<RawSegment> raw;
    double scale = 0.0;  // true value = stored value * exp(scale)
    double left = start;
    double a_value = 0.0, a_slope = 0.0;
    const double a_point = std::max(p.range(), start);
    bool have_a_point = (a_point == start);
    if (have_a_point) {
        a_value = f;
        a_slope = df;
    }
    for (double right : points) {
        const double T = right - left;
        const double v = p.regular_value(0.5 * (left + right));
        const double k = std::sqrt(0.5 * v);
        RawSegment seg{left, right, k, f, df, scale, 0.0, 0.0, scale, false};
        if (k * T <= kLocalFormLimit) {
            double fr = f * std::cosh(k * T) + df * T * sinhc(k * T);
            double dr = f * k * std::sinh(k * T) + df * std::cosh(k * T);
            f = fr;
            df = dr;
        } else {
            // Values scaled by exp(-kT) to avoid overflow across thick barriers.
            double p_ = 0.5 * (f + df / k), q_ = 0.5 * (f - df / k);
            double e2 = std::exp(-2.0 * k * T);
            f = p_ + q_ * e2;
            df = k * (p_ - q_ * e2);
            scale += k * T;
        }
        seg.f_right = f;
        seg.slope_right = df;
        seg.scale_right = scale;
        raw.push_back(seg);
        if (right < radius) df += 0.5 * p.spike_strength_at(right) * f;
        if (!have_a_point && right == a_point) {
            a_value = f;
            a_slope = df;
            have_a_point = true;
        }
        double n = std::max(std::abs(f), std::abs(df));
        if (n > 0.0 && std::isfinite(n)) {
            f /= n;
            df /= n;
            scale += std::log(n);
        }
        left = right;
    }

    if (!(f > 0.0)) throw InternalError("scattering solution does not reach f(R) > 0");
    const double f_end = f, scale_end = scale;
    auto normalise = [&](double v, double s) { return v * std::exp(s - scale_end) / f_end; };

    if (start > 0.0) {
        ScatteringSegment core;
        core.left = 0.0;
        core.right = start;
        core.vanishing = true;
        out.segments.push_back(core);
    }
    for (const auto& r : raw) {
        ScatteringSegment s;
        s.left = r.left;
        s.right = r.right;
        s.k = r.k;
        s.f_left = normalise(r.f_left, r.scale_left);
        s.slope_left = normalise(r.slope_left, r.scale_left);
        if (!local_form(s)) {
            double fr = normalise(r.f_right, r.scale_right);
            double dr = normalise(r.slope_right, r.scale_right);
            s.grow = 0.5 * (fr + dr / s.k);
            s.decay = 0.5 * (s.f_left - s.slope_left / s.k);
        }
        out.segments.push_back(s);
    }

    if (channel == Channel::Even && p.is_free()) {
        out.scattering_length.reset();
    } else {
        if (!(a_slope > 0.0)) throw InternalError("degenerate slope at the potential edge");
        out.scattering_length = a_point - a_value / a_slope;
    }
    return out;
}

double scattering_energy(const ScatteringResult& r) {
    static const GaussRule rule = gauss_legendre(24);
    double half = 0.0;
    for (const auto& s : r.segments) {
        if (s.vanishing) continue;
        const double T = s.right - s.left;
        const double v = 2.0 * s.k * s.k;
        if (local_form(s)) {
            // Entire integrand over kT <= 1: 24-point Gauss is exact to rounding.
            half += integrate(rule, s.left, s.right, [&](double x) {
                double d = s.slope(x), f = s.value(x);
                return 2.0 * d * d + v * f * f;
            });
        } else {
            // 2 f'^2 + v f^2 = 4 k^2 (grow^2 e^{2k(x-R)} + decay^2 e^{-2k(x-L)}).
            half += 2.0 * s.k * (s.grow * s.grow + s.decay * s.decay) * -std::expm1(-2.0 * s.k * T);
        }
    }
    double spikes = 0.0;
    for (const auto& c : r.potential.components()) {
        auto d = std::get_if<DeltaSpike>(&c);
        if (!d) continue;
        double f = r.value(d->location);
        spikes += (d->location == 0.0 ? 1.0 : 2.0) * d->strength * f * f;
    }
    return 2.0 * half + spikes;
}

double SampledFunction::operator()(double t) const {
    if (t <= x.front()) return y.front();
    if (t >= x.back()) return y.back();
    auto it = std::upper_bound(x.begin(), x.end(), t);
    std::size_t j = static_cast<std::size_t>(it - x.begin());
    double w = (t - x[j - 1]) / (x[j] - x[j - 1]);
    return (1.0 - w) * y[j - 1] + w * y[j];
}

DysonCheck check_dyson_inequality(const ScatteringResult& r, const SampledFunction& trial,
                                  double tolerance) {
    const auto& x = trial.x;
    const auto& y = trial.y;
    const double R = r.radius;
    if (x.size() < 2 || x.size() != y.size()) throw InvalidTrial("trial needs matching x/y with >= 2 nodes");
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!(x[i] > x[i - 1])) throw InvalidTrial("trial nodes must be strictly increasing");
    if (std::abs(x.front() + R) > 1e-12 * R || std::abs(x.back() - R) > 1e-12 * R)
        throw InvalidTrial("trial must be sampled on exactly [-R, R]");
    const double left_target = r.channel == Channel::Even ? 1.0 : -1.0;
    if (std::abs(y.back() - 1.0) > 1e-12 || std::abs(y.front() - left_target) > 1e-12)
        throw InvalidTrial("trial violates the boundary values at +-R");

    const Potential& p = r.potential;
    for (const auto& c : p.components()) {
        auto b = std::get_if<HardCoreBand>(&c);
        if (!b) continue;
        bool bad = false;
        for (double e : {b->inner, b->outer, -b->inner, -b->outer})
            bad = bad || std::abs(trial(e)) > 1e-12;
        for (std::size_t i = 0; i < x.size(); ++i) {
            double ax = std::abs(x[i]);
            if (ax >= b->inner && ax <= b->outer && std::abs(y[i]) > 1e-12) bad = true;
        }
        if (bad) throw InvalidTrial("trial does not vanish on a hard-core band");
    }

    std::vector<double> cuts;
    for (const auto& c : p.components())
        if (auto s = std::get_if<PiecewiseConstant>(&c))
            for (double t : s->breakpoints) {
                cuts.push_back(t);
                cuts.push_back(-t);
            }
    std::sort(cuts.begin(), cuts.end());

    double lhs = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double dx = x[i] - x[i - 1];
        const double dy = y[i] - y[i - 1];
        lhs += 2.0 * dy * dy / dx;
        double a = x[i - 1];
        auto it = std::upper_bound(cuts.begin(), cuts.end(), a);
        while (a < x[i]) {
            double b = (it != cuts.end() && *it < x[i]) ? *it++ : x[i];
            double v = p.regular_value(0.5 * (a + b));
            if (v > 0.0) {
                double ya = trial(a), yb = trial(b);
                lhs += v * (b - a) / 3.0 * (ya * ya + ya * yb + yb * yb);
            }
            a = b;
        }
    }
    for (const auto& c : p.components()) {
        auto d = std::get_if<DeltaSpike>(&c);
        if (!d) continue;
        double fp = trial(d->location), fm = trial(-d->location);
        lhs += d->location == 0.0 ? d->strength * fp * fp : d->strength * (fp * fp + fm * fm);
    }

    DysonCheck out;
    out.lhs = lhs;
    out.rhs = r.minimal_energy();
    out.holds = out.lhs >= out.rhs - tolerance * std::max(1.0, out.rhs);
    return out;
}

SampledFunction sample_solution(const ScatteringResult& r, int n) {
    std::vector<double> pts;
    n = std::max(n, 2);
    for (int i = 0; i <= n; ++i) pts.push_back(r.radius * i / n);
    for (const auto& s : r.segments) {
        pts.push_back(s.left);
        pts.push_back(s.right);
    }
    std::vector<double> all;
    for (double t : pts) {
        all.push_back(t);
        all.push_back(-t);
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    SampledFunction out;
    out.x = all;
    for (double t : all) out.y.push_back(r.value(t));
    out.y.back() = 1.0;
    out.y.front() = r.channel == Channel::Even ? 1.0 : -1.0;
    return out;
}

}  // namespace dilute1d
