#include "dilute1d/trial_states.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dilute1d/errors.hpp"
#include "dilute1d/quadrature.hpp"

namespace dilute1d {

namespace {

constexpr double kPi = std::numbers::pi;

struct Closest {
    int index;   // pair (index, index + 1) in sorted order
    double gap;
};

Closest closest_pair(std::span<const double> x) {
    Closest c{0, x[1] - x[0]};
    for (std::size_t i = 1; i + 1 < x.size(); ++i)
        if (x[i + 1] - x[i] < c.gap) c = {static_cast<int>(i), x[i + 1] - x[i]};
    return c;
}

std::vector<double> feature_radii(const Potential& p, const std::optional<ScatteringResult>& s) {
    std::vector<double> out;
    for (const auto& comp : p.components()) {
        if (const auto* hc = std::get_if<HardCoreBand>(&comp)) {
            out.push_back(hc->inner);
            out.push_back(hc->outer);
        } else if (const auto* d = std::get_if<DeltaSpike>(&comp)) {
            out.push_back(d->location);
        } else {
            for (double b : std::get<PiecewiseConstant>(comp).breakpoints) out.push_back(b);
        }
    }
    if (s)
        for (const auto& seg : s->segments) out.push_back(seg.right);
    std::erase_if(out, [](double r) { return !(r > 0.0); });
    return out;
}

// Panel edges on [lo, hi]: the given cut points inside the interval plus
// `bulk` equal divisions.
std::vector<double> edges(double lo, double hi, const std::vector<double>& cuts, int bulk) {
    std::vector<double> e{lo, hi};
    for (double c : cuts)
        if (c > lo && c < hi) e.push_back(c);
    for (int k = 1; k < bulk; ++k) e.push_back(lo + (hi - lo) * k / bulk);
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end(), [&](double a, double b) { return b - a <= 1e-14 * (hi - lo); }), e.end());
    return e;
}

// Composite Gauss sum of f over the panels given by `e`.
template <class F>
double panel_sum(const GaussRule& rule, const std::vector<double>& e, F&& f) {
    std::vector<double> parts;
    parts.reserve(e.size());
    for (std::size_t i = 1; i < e.size(); ++i) parts.push_back(integrate(rule, e[i - 1], e[i], f));
    return pairwise_sum(parts);
}

struct Accum {
    double kinetic = 0.0, potential = 0.0, norm = 0.0;
};

}  // namespace

double TrialState::profile(double r) const {
    if (!scattering_ || r >= b_) return 1.0;
    return b_ * scattering_->value(r) / r;
}

double TrialState::profile_slope(double r) const {
    if (!scattering_ || r >= b_) return 0.0;
    return b_ * (scattering_->slope(r) * r - scattering_->value(r)) / (r * r);
}

double TrialState::contact_value(std::span<const double> sorted, int i) const {
    if (!scattering_) return 0.0;
    return b_ * scattering_->value(0.0) * psi_F_pair_reduced(ensemble_, sorted, i, i + 1, {});
}

double TrialState::value_and_gradient(std::span<const double> sorted, std::span<double> grad) const {
    const Closest c = closest_pair(sorted);
    if (!scattering_ || c.gap >= b_) return psi_F_gradient(ensemble_, sorted, grad);
    const double f = scattering_->value(c.gap), fp = scattering_->slope(c.gap);
    const double q = psi_F_pair_reduced(ensemble_, sorted, c.index, c.index + 1, grad);
    for (double& g : grad) g *= b_ * f;
    grad[static_cast<std::size_t>(c.index)] -= b_ * fp * q;
    grad[static_cast<std::size_t>(c.index) + 1] += b_ * fp * q;
    return b_ * f * q;
}

double TrialState::value(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != particles()) throw InvalidParameter("trial state: coordinate count must equal N");
    std::array<double, 3> s{};
    std::copy(x.begin(), x.end(), s.begin());
    std::sort(s.begin(), s.begin() + particles());
    const std::span<const double> sorted(s.data(), x.size());
    const Closest c = closest_pair(sorted);
    if (c.gap == 0.0) return contact_value(sorted, c.index);
    if (!scattering_ || c.gap >= b_) return psi_F(ensemble_, sorted);
    return b_ * scattering_->value(c.gap) * psi_F_pair_reduced(ensemble_, sorted, c.index, c.index + 1, {});
}

TrialState build_trial(int n, double length, const Potential& p, double b) {
    if (n != 2 && n != 3) throw InvalidParameter("trial states are built for N = 2 or 3");
    if (!(b > p.range())) throw InvalidScale("healing length b must exceed the potential range R0");
    if (!(b < length)) throw InvalidScale("healing length b must be smaller than the box");
    if (n == 3)
        for (const auto& comp : p.components())
            if (const auto* hc = std::get_if<HardCoreBand>(&comp); hc && hc->inner > 0.0)
                throw InvalidParameter("N = 3 trial states support hard cores only at contact");

    TrialState t(FermiEnsemble(n, length), p, b);
    if (!p.is_free()) {
        ScatteringResult s = solve_scattering(p, Channel::Even, b);
        if (s.scattering_length) {
            const double a = *s.scattering_length;
            if (std::abs(a) >= 0.5 * b) {
                std::ostringstream msg;
                msg << "|a| = " << std::abs(a) << " is not small against b = " << b;
                t.warnings_.push_back(msg.str());
            }
        }
        t.scattering_ = std::move(s);
    }
    if (b > 0.25 * length) t.warnings_.push_back("b is not small against L");
    if (n == 3) t.warnings_.push_back("N = 3: kinetic energy across closest-pair switches is not validated");

    // Inner and outer branches must agree on R(x) = b.
    if (t.scattering_) {
        double worst = 0.0, scale = 0.0;
        for (int k = 1; k < 64; ++k) {
            std::array<double, 3> x{};
            x[0] = (length - b) * k / 64.0 * (n == 3 ? 0.5 : 1.0);
            x[1] = x[0] + b;
            if (n == 3) x[2] = x[1] + b + 0.5 * (length - x[1] - b);
            const std::span<const double> sx(x.data(), static_cast<std::size_t>(n));
            const double outer = psi_F(t.ensemble_, sx);
            const double inner = b * t.scattering_->value(b) * psi_F_pair_reduced(t.ensemble_, sx, 0, 1, {});
            worst = std::max(worst, std::abs(outer - inner));
            scale = std::max(scale, std::abs(outer));
        }
        if (worst > 1e-10 * std::max(scale, 1e-300)) throw InternalError("trial state is discontinuous at R(x) = b");
    }
    return t;
}

namespace {

Accum integrate_two(const TrialState& t, int order) {
    const double L = t.length(), b = t.healing();
    const GaussRule rule = gauss_legendre(order);
    std::vector<double> cuts = feature_radii(t.potential(), t.scattering());
    cuts.push_back(b);
    const Potential& p = t.potential();

    Accum acc;
    std::vector<double> kin, pot, nrm;
    const auto re = edges(0.0, L, cuts, 8);
    for (std::size_t i = 1; i < re.size(); ++i) {
        const double half = 0.5 * (re[i] - re[i - 1]), mid = 0.5 * (re[i] + re[i - 1]);
        for (int q = 0; q < rule.size(); ++q) {
            const double r = mid + half * rule.nodes[static_cast<std::size_t>(q)];
            const double wr = half * rule.weights[static_cast<std::size_t>(q)];
            const double v = p.regular_value(r);
            double k = 0.0, u = 0.0, m = 0.0;
            const double hx = 0.5 * (L - r);
            for (int s = 0; s < rule.size(); ++s) {
                const double X = hx + hx * rule.nodes[static_cast<std::size_t>(s)];
                const double w = hx * rule.weights[static_cast<std::size_t>(s)];
                std::array<double, 2> x{X, X + r}, g{};
                const double psi = t.value_and_gradient(x, g);
                k += w * (g[0] * g[0] + g[1] * g[1]);
                u += w * v * psi * psi;
                m += w * psi * psi;
            }
            kin.push_back(2.0 * wr * k);
            pot.push_back(2.0 * wr * u);
            nrm.push_back(2.0 * wr * m);
        }
    }
    acc.kinetic = pairwise_sum(kin);
    acc.potential = pairwise_sum(pot);
    acc.norm = pairwise_sum(nrm);

    // Delta spikes: line integrals over the contact or shifted diagonal.
    for (const auto& comp : p.components()) {
        const auto* d = std::get_if<DeltaSpike>(&comp);
        if (!d || d->location >= L) continue;
        const double x0 = d->location;
        const double line = integrate(rule, 0.0, L - x0, [&](double X) {
            std::array<double, 2> x{X, X + x0};
            const double psi = x0 == 0.0 ? t.contact_value(x, 0) : t.value(x);
            return psi * psi;
        });
        acc.potential += (x0 == 0.0 ? 1.0 : 2.0) * d->strength * line;
    }
    return acc;
}

Accum integrate_three(const TrialState& t, int order) {
    const double L = t.length(), b = t.healing();
    const GaussRule rule = gauss_legendre(std::max(8, order / 4));
    const std::vector<double> feats = feature_radii(t.potential(), t.scattering());
    const Potential& p = t.potential();
    auto shifted = [&](double by) {
        std::vector<double> c;
        for (double f : feats) c.push_back(f - by);
        return c;
    };

    Accum acc;
    std::vector<double> kin, pot, nrm;
    std::vector<double> c1 = feats;
    c1.push_back(b);
    const auto e1 = edges(0.0, L, c1, 4);
    for (std::size_t i = 1; i < e1.size(); ++i) {
        const double h1 = 0.5 * (e1[i] - e1[i - 1]), m1 = 0.5 * (e1[i] + e1[i - 1]);
        for (int q1 = 0; q1 < rule.size(); ++q1) {
            const double r1 = m1 + h1 * rule.nodes[static_cast<std::size_t>(q1)];
            const double w1 = h1 * rule.weights[static_cast<std::size_t>(q1)];
            std::vector<double> c2 = feats;
            for (double c : shifted(r1)) c2.push_back(c);
            c2.push_back(b);
            c2.push_back(r1);
            const auto e2 = edges(0.0, L - r1, c2, 4);
            double k = 0.0, u = 0.0, m = 0.0;
            for (std::size_t j = 1; j < e2.size(); ++j) {
                const double h2 = 0.5 * (e2[j] - e2[j - 1]), m2 = 0.5 * (e2[j] + e2[j - 1]);
                for (int q2 = 0; q2 < rule.size(); ++q2) {
                    const double r2 = m2 + h2 * rule.nodes[static_cast<std::size_t>(q2)];
                    const double w2 = h2 * rule.weights[static_cast<std::size_t>(q2)];
                    const double v = p.regular_value(r1) + p.regular_value(r2) + p.regular_value(r1 + r2);
                    const double hx = 0.5 * (L - r1 - r2);
                    for (int s = 0; s < rule.size(); ++s) {
                        const double X = hx + hx * rule.nodes[static_cast<std::size_t>(s)];
                        const double w = w2 * hx * rule.weights[static_cast<std::size_t>(s)];
                        std::array<double, 3> x{X, X + r1, X + r1 + r2}, g{};
                        const double psi = t.value_and_gradient(x, g);
                        k += w * (g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
                        u += w * v * psi * psi;
                        m += w * psi * psi;
                    }
                }
            }
            kin.push_back(6.0 * w1 * k);
            pot.push_back(6.0 * w1 * u);
            nrm.push_back(6.0 * w1 * m);
        }
    }
    acc.kinetic = pairwise_sum(kin);
    acc.potential = pairwise_sum(pot);
    acc.norm = pairwise_sum(nrm);

    // Surface integrals for delta spikes. A contact spike sits on the sector
    // boundary and counts half per sector.
    auto face = [&](double lo, double hi, std::vector<double> cuts, auto&& point) {
        cuts.push_back(b);
        return panel_sum(rule, edges(lo, hi, cuts, 4), [&](double s) {
            return integrate(rule, 0.0, 1.0, [&](double frac) {
                const auto [x, room] = point(s, frac);
                const double psi = x[1] - x[0] == 0.0 ? t.contact_value(x, 0)
                                   : x[2] - x[1] == 0.0 ? t.contact_value(x, 1)
                                                        : t.value(x);
                return room * psi * psi;
            });
        });
    };
    for (const auto& comp : p.components()) {
        const auto* d = std::get_if<DeltaSpike>(&comp);
        if (!d || d->location >= L) continue;
        const double x0 = d->location;
        double total = 0.0;
        // Gap (1,2) equal to x0, remaining gap s.
        total += face(0.0, L - x0, [&] { auto c = feats; c.push_back(x0); for (double f : shifted(x0)) c.push_back(f); return c; }(),
                      [&](double s, double frac) {
                          const double room = L - x0 - s;
                          std::array<double, 3> x{frac * room, frac * room + x0, frac * room + x0 + s};
                          return std::pair{x, room};
                      });
        // Gap (2,3) equal to x0.
        total += face(0.0, L - x0, [&] { auto c = feats; c.push_back(x0); for (double f : shifted(x0)) c.push_back(f); return c; }(),
                      [&](double s, double frac) {
                          const double room = L - x0 - s;
                          std::array<double, 3> x{frac * room, frac * room + s, frac * room + s + x0};
                          return std::pair{x, room};
                      });
        if (x0 > 0.0) {
            // Outer pair at distance x0: inner particle splits it as (s, x0 - s).
            std::vector<double> c{0.5 * x0, x0 - b};
            for (double f : feats) {
                c.push_back(f);
                c.push_back(x0 - f);
            }
            total += face(0.0, x0, c, [&](double s, double frac) {
                const double room = L - x0;
                std::array<double, 3> x{frac * room, frac * room + s, frac * room + x0};
                return std::pair{x, room};
            });
        }
        acc.potential += (x0 == 0.0 ? 3.0 : 6.0) * d->strength * total;
    }
    return acc;
}

TrialEnergy evaluate(const TrialState& t, int order) {
    const Accum a = t.particles() == 2 ? integrate_two(t, order) : integrate_three(t, order);
    TrialEnergy e;
    e.kinetic = a.kinetic;
    e.potential = a.potential;
    e.norm = a.norm;
    e.energy = (a.kinetic + a.potential) / a.norm;
    e.order = order;
    return e;
}

}  // namespace

TrialEnergy trial_energy(const TrialState& t, int order) {
    if (order < 64) throw InvalidParameter("quadrature order must be >= 64");
    const TrialEnergy coarse = evaluate(t, order);
    TrialEnergy fine = evaluate(t, 2 * order);
    fine.relative_change = std::abs(fine.energy - coarse.energy) / std::abs(fine.energy);
    if (!(fine.relative_change <= 1e-6)) {
        std::ostringstream msg;
        msg << "trial energy quadrature did not converge: E(" << order << ") = " << coarse.energy << ", E("
            << 2 * order << ") = " << fine.energy << ", relative change " << fine.relative_change;
        throw AccuracyError(msg.str());
    }
    return fine;
}

double theorem_healing_length(int n, double length, const Potential& p) {
    if (n < 1 || !(length > 0.0)) throw InvalidParameter("need N >= 1 and L > 0");
    const double rho = n / length;
    const double r0 = p.range();
    const ScatteringResult s = solve_scattering(p, Channel::Even, r0 > 0.0 ? 2.0 * r0 : 1.0);
    if (!s.scattering_length) throw InvalidParameter("scattering length is undefined for v = 0");
    const double a = *s.scattering_length;
    return std::max(std::pow(rho, -0.2) * std::pow(std::abs(a), 0.8), r0);
}

double upper_bound_theorem(int n, double length, const Potential& p, double c_upper) {
    if (n < 1 || !(length > 0.0)) throw InvalidParameter("need N >= 1 and L > 0");
    const double rho = n / length;
    const double r0 = p.range();
    const ScatteringResult s = solve_scattering(p, Channel::Even, r0 > 0.0 ? 2.0 * r0 : 1.0);
    if (!s.scattering_length) throw InvalidParameter("scattering length is undefined for v = 0");
    const double a = *s.scattering_length;
    const double b = std::max(std::pow(rho, -0.2) * std::pow(std::abs(a), 0.8), r0);
    double first = 0.0;
    if (a != 0.0) {
        if (a > 0.0 && !(b > a)) throw InvalidScale("healing length does not exceed the scattering length");
        first = 2.0 * rho * a * b / (b - a);
    }
    const double errors = (std::pow(rho * std::abs(a), 1.2) + std::pow(rho * r0, 1.5)) *
                              std::sqrt(1.0 + rho * r0 * r0 * p.regular_mass()) +
                          1.0 / n;
    return n * kPi * kPi / 3.0 * rho * rho * (1.0 + first + c_upper * errors);
}

}  // namespace dilute1d
