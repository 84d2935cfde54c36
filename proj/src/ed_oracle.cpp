#include "dilute1d/ed_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/CholmodSupport>
#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>

#include "dilute1d/errors.hpp"
#include "dilute1d/lanczos.hpp"

namespace dilute1d {

namespace {

constexpr double kAlignTol = 1e-9;
constexpr double kMaxNonZeros = 2e7;
constexpr Eigen::Index kDenseLimit = 600;

bool aligned(double r, double h) {
    const double q = r / h;
    return std::abs(q - std::round(q)) < kAlignTol * std::max(1.0, q);
}

void require_resolved(double r, double h, const char* what) {
    if (r <= 0.0 || aligned(r, h) || r >= 4.0 * h) return;
    std::ostringstream msg;
    msg << what << " at " << r << " is neither on the grid nor resolved by 4 cells (h = " << h << ")";
    throw ResolutionError(msg.str());
}

// Per-separation data: pair energy on the diagonal and exclusion flag, indexed
// by the node-index difference m (separation m h).
struct PairTable {
    std::vector<double> weight;
    std::vector<char> excluded;
};

double step_value(const PiecewiseConstant& pc, double r, double h) {
    const auto& b = pc.breakpoints;
    const auto& v = pc.values;
    for (std::size_t j = 1; j < b.size(); ++j) {
        if (std::abs(r - b[j]) < kAlignTol * h) {
            const double right = j < v.size() ? v[j] : 0.0;
            return 0.5 * (v[j - 1] + right);
        }
    }
    for (std::size_t j = 0; j + 1 < b.size(); ++j)
        if (r >= b[j] && r < b[j + 1]) return v[j];
    return 0.0;
}

PairTable pair_table(const Potential& pot, int nodes, double h, bool fermi) {
    PairTable t;
    t.weight.assign(static_cast<std::size_t>(nodes), 0.0);
    t.excluded.assign(static_cast<std::size_t>(nodes), 0);
    if (fermi) t.excluded[0] = 1;

    for (const auto& comp : pot.components()) {
        if (const auto* hc = std::get_if<HardCoreBand>(&comp)) {
            require_resolved(hc->inner, h, "hard-core edge");
            require_resolved(hc->outer, h, "hard-core edge");
            const double width = hc->outer - hc->inner;
            if (width == 0.0 && hc->inner > 0.0 && !aligned(hc->inner, h))
                throw ResolutionError("impenetrable point off the grid");
            if (width > 0.0 && width < 4.0 * h && !(aligned(hc->inner, h) && aligned(hc->outer, h)))
                throw ResolutionError("hard-core band thinner than 4 cells and off the grid");
            for (int m = 0; m < nodes; ++m) {
                const double r = m * h;
                if (r >= hc->inner - kAlignTol * h && r <= hc->outer + kAlignTol * h)
                    t.excluded[static_cast<std::size_t>(m)] = 1;
            }
        } else if (const auto* d = std::get_if<DeltaSpike>(&comp)) {
            if (d->location == 0.0) {
                t.weight[0] += d->strength / h;
                continue;
            }
            require_resolved(d->location, h, "delta spike");
            for (int m = 0; m < nodes; ++m) {
                const double hat = 1.0 - std::abs(m * h - d->location) / h;
                if (hat > 0.0) t.weight[static_cast<std::size_t>(m)] += d->strength / h * hat;
            }
        } else {
            const auto& pc = std::get<PiecewiseConstant>(comp);
            for (std::size_t j = 1; j < pc.breakpoints.size(); ++j)
                require_resolved(pc.breakpoints[j], h, "step breakpoint");
            for (int m = 0; m < nodes; ++m) t.weight[static_cast<std::size_t>(m)] += step_value(pc, m * h, h);
        }
    }
    return t;
}

int orbit_size(const std::array<int, 3>& s, int n) {
    if (n == 1) return 1;
    if (n == 2) return s[0] == s[1] ? 1 : 2;
    if (s[0] == s[1] && s[1] == s[2]) return 1;
    if (s[0] == s[1] || s[1] == s[2]) return 3;
    return 6;
}

void validate_problem(const OracleProblem& p) {
    if (p.particles < 1 || p.particles > 3) throw InvalidParameter("oracle supports 1 <= N <= 3");
    if (!(p.length > 0.0) || !std::isfinite(p.length)) throw InvalidParameter("box length must be > 0");
}

}  // namespace

const char* to_string(Boundary b) { return b == Boundary::Neumann ? "neumann" : "dirichlet"; }
const char* to_string(Statistics s) { return s == Statistics::Bose ? "bose" : "fermi"; }

Boundary parse_boundary(const std::string& text) {
    if (text == "neumann") return Boundary::Neumann;
    if (text == "dirichlet") return Boundary::Dirichlet;
    throw InvalidParameter("boundary must be 'neumann' or 'dirichlet', got '" + text + "'");
}

GridHamiltonian build_hamiltonian(const OracleProblem& p, int cells) {
    validate_problem(p);
    if (cells < 4) throw ResolutionError("grid needs at least 4 cells");
    const int n = p.particles;
    const bool neumann = p.boundary == Boundary::Neumann;
    const int nodes = neumann ? cells : cells - 1;
    const double h = p.length / cells;
    const PairTable pairs = pair_table(p.potential, nodes, h, p.statistics == Statistics::Fermi);

    auto pair_allowed = [&](int i, int j) { return !pairs.excluded[static_cast<std::size_t>(std::abs(i - j))]; };
    auto site_allowed = [&](const std::array<int, 3>& s) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (!pair_allowed(s[static_cast<std::size_t>(a)], s[static_cast<std::size_t>(b)])) return false;
        return true;
    };

    GridHamiltonian g;
    g.spacing = h;
    g.cells = cells;
    g.nodes_per_dimension = nodes;

    // Enumerate sorted tuples i0 <= i1 <= i2.
    std::array<int, 3> s{-1, -1, -1};
    const int hi1 = n >= 2 ? nodes : 1, hi2 = n >= 3 ? nodes : 1;
    for (int i = 0; i < nodes; ++i)
        for (int j = n >= 2 ? i : 0; j < hi1; ++j)
            for (int k = n >= 3 ? j : 0; k < hi2; ++k) {
                s = {i, n >= 2 ? j : -1, n >= 3 ? k : -1};
                if (site_allowed(s)) g.sites.push_back(s);
            }
    if (g.sites.empty()) throw InvalidParameter("hard cores exclude every configuration: box overpacked");
    const double nnz = static_cast<double>(g.sites.size()) * (2 * n + 1);
    if (nnz > kMaxNonZeros) throw InvalidParameter("grid too large for the oracle; reduce cells");

    std::size_t dense_size = 1;
    for (int a = 0; a < n; ++a) dense_size *= static_cast<std::size_t>(nodes);
    std::vector<int> index(dense_size, -1);
    auto key = [&](const std::array<int, 3>& t) {
        std::size_t k = 0;
        for (int a = 0; a < n; ++a) k = k * static_cast<std::size_t>(nodes) + static_cast<std::size_t>(t[static_cast<std::size_t>(a)]);
        return k;
    };
    for (std::size_t r = 0; r < g.sites.size(); ++r) index[key(g.sites[r])] = static_cast<int>(r);

    const double inv_h2 = 1.0 / (h * h);
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<std::size_t>(nnz));
    std::vector<std::pair<int, double>> row;
    for (std::size_t r = 0; r < g.sites.size(); ++r) {
        const auto& site = g.sites[r];
        double diag = 2.0 * n * inv_h2;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                diag += pairs.weight[static_cast<std::size_t>(std::abs(site[static_cast<std::size_t>(a)] - site[static_cast<std::size_t>(b)]))];
        row.clear();
        for (int a = 0; a < n; ++a)
            for (int dir : {-1, 1}) {
                std::array<int, 3> t = site;
                int& moved = t[static_cast<std::size_t>(a)];
                moved += dir;
                if (moved < 0 || moved >= nodes) {
                    if (neumann) diag -= inv_h2;  // mirrored ghost equals the site itself
                    continue;
                }
                std::sort(t.begin(), t.begin() + n);
                const int c = index[key(t)];
                if (c < 0) continue;  // excluded configuration: wave function vanishes there
                if (static_cast<std::size_t>(c) == r) {
                    diag -= inv_h2;
                    continue;
                }
                const double w = std::sqrt(static_cast<double>(orbit_size(site, n)) / orbit_size(t, n));
                row.emplace_back(c, -inv_h2 * w);
            }
        trip.emplace_back(static_cast<int>(r), static_cast<int>(r), diag);
        for (const auto& [c, v] : row) trip.emplace_back(static_cast<int>(r), c, v);
    }
    const auto dim = static_cast<Eigen::Index>(g.sites.size());
    g.matrix.resize(dim, dim);
    g.matrix.setFromTriplets(trip.begin(), trip.end());
    g.matrix.makeCompressed();
    return g;
}

namespace {

GridEnergy solve_grid(const OracleProblem& p, int cells, Eigen::VectorXd* vector_out) {
    const GridHamiltonian g = build_hamiltonian(p, cells);
    GridEnergy out;
    out.cells = cells;
    out.spacing = g.spacing;
    out.sites = g.sites.size();
    out.lowest.fill(std::numeric_limits<double>::quiet_NaN());
    const Eigen::Index dim = g.matrix.rows();

    Eigen::VectorXd ground;
    if (dim <= kDenseLimit) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es{Eigen::MatrixXd(g.matrix)};
        for (Eigen::Index i = 0; i < std::min<Eigen::Index>(3, dim); ++i)
            out.lowest[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
        ground = es.eigenvectors().col(0);
    } else {
        // Shift-invert about a point safely below the spectrum; H is positive
        // semidefinite so H - sigma is positive definite.
        const double k1 = std::numbers::pi / p.length;
        const double sigma = -k1 * k1;
        Eigen::SparseMatrix<double> shifted = g.matrix;
        for (Eigen::Index i = 0; i < dim; ++i) shifted.coeffRef(i, i) -= sigma;
        Eigen::CholmodSupernodalLLT<Eigen::SparseMatrix<double>, Eigen::Lower> llt;
        llt.compute(shifted);
        if (llt.info() != Eigen::Success) throw InternalError("Cholesky factorisation of the shifted Hamiltonian failed");
        LinearOperator op = [&](const Eigen::VectorXd& in, Eigen::VectorXd& res) { res = llt.solve(in); };
        const LanczosResult lr = lanczos_largest(op, dim);
        out.iterations = lr.iterations;
        std::vector<std::pair<double, std::size_t>> ev;
        for (std::size_t i = 0; i < lr.values.size(); ++i) ev.emplace_back(sigma + 1.0 / lr.values[i], i);
        std::sort(ev.begin(), ev.end());
        for (std::size_t i = 0; i < ev.size() && i < 3; ++i) out.lowest[i] = ev[i].first;
        ground = lr.vectors[ev.front().second];
    }
    const Eigen::VectorXd hv = g.matrix * ground;
    out.residual = (hv - out.lowest[0] * ground).norm() / std::max(1.0, std::abs(out.lowest[0]));
    if (vector_out) *vector_out = std::move(ground);
    return out;
}

}  // namespace

SpectralResult ground_energy(const OracleProblem& p, int refinements, bool keep_vector) {
    validate_problem(p);
    if (refinements < 3) throw InvalidParameter("Richardson extrapolation needs refinements >= 3");
    if (p.cells < 64) throw ResolutionError("finest grid needs at least 64 cells");
    const int factor = 1 << (refinements - 1);
    if (p.cells % factor != 0) throw InvalidParameter("cells must be divisible by 2^(refinements-1)");
    if (p.cells / factor < 8) throw ResolutionError("coarsest grid would have fewer than 8 cells");

    SpectralResult out;
    for (int j = refinements - 1; j >= 0; --j) {
        const bool finest = j == 0;
        out.grids.push_back(solve_grid(p, p.cells >> j, finest && keep_vector ? &out.ground_state : nullptr));
    }
    const std::size_t k = out.grids.size();
    const double e2 = out.grids[k - 1].lowest[0], e1 = out.grids[k - 2].lowest[0], e0 = out.grids[k - 3].lowest[0];
    const double d_fine = e1 - e2, d_coarse = e0 - e1;
    out.order = 2.0;
    if (d_fine != 0.0) {
        const double ratio = d_coarse / d_fine;
        if (std::isfinite(ratio) && ratio > 1.0) out.order = std::clamp(std::log2(ratio), 1.0, 4.0);
        out.extrapolated = e2 + (e2 - e1) / (std::exp2(out.order) - 1.0);
    } else {
        out.extrapolated = e2;
    }
    out.error = std::abs(e2 - out.extrapolated);
    return out;
}

RobinsonCheck robinson_check(int n, double ell, double b, const Potential& p, int cells, int refinements) {
    if (n < 1 || n > 3) throw InvalidParameter("Robinson check supports 1 <= n <= 3");
    if (!(b > 0.0)) throw InvalidParameter("margin b must be > 0");
    for (const auto& comp : p.components()) {
        if (const auto* hc = std::get_if<HardCoreBand>(&comp)) {
            if (hc->inner != 0.0) throw InvalidParameter("Robinson check needs a symmetric decreasing potential");
        } else if (const auto* d = std::get_if<DeltaSpike>(&comp)) {
            if (d->location != 0.0) throw InvalidParameter("Robinson check needs a symmetric decreasing potential");
        } else {
            const auto& v = std::get<PiecewiseConstant>(comp).values;
            if (!std::is_sorted(v.rbegin(), v.rend()))
                throw InvalidParameter("Robinson check needs a symmetric decreasing potential");
        }
    }
    OracleProblem dir{n, ell + 2.0 * b, Boundary::Dirichlet, p, Statistics::Bose, cells};
    OracleProblem neu{n, ell, Boundary::Neumann, p, Statistics::Bose, cells};
    const SpectralResult d = ground_energy(dir, refinements);
    const SpectralResult m = ground_energy(neu, refinements);
    RobinsonCheck out;
    out.lhs_dirichlet = d.extrapolated;
    out.rhs_neumann = m.extrapolated;
    out.slack = 2.0 * n / (b * b);
    out.error = d.error + m.error;
    out.holds = out.lhs_dirichlet <= out.rhs_neumann + out.slack + out.error;
    return out;
}

}  // namespace dilute1d
