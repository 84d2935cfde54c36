#include "dilute1d/sweep.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "dilute1d/errors.hpp"
#include "dilute1d/lieb_liniger.hpp"

namespace dilute1d {

namespace {

std::vector<std::string> columns_for(const std::string& kind) {
    if (kind == "gamma") return {"gamma", "lambda", "e", "lower_bound", "expansion_value", "residual", "n_nodes"};
    if (kind == "kappa") return {"kappa", "coupling", "effective_coupling", "scattering_length"};
    if (kind == "coupling")
        return {"coupling", "scattering_length", "leading", "expansion", "lower", "upper", "verdict"};
    throw InvalidParameter("unknown sweep kind '" + kind + "' (gamma, kappa, coupling)");
}

std::vector<Cell> run_point(const SweepSpec& spec, double x) {
    if (spec.kind == "gamma") {
        const LLGroundState s = e_of_gamma(x, spec.ll_nodes);
        const double residual = s.gamma >= 5.0 ? expansion_residual(s) : std::nan("");
        return {x, s.lambda, s.e, ll_lower_bound(s.gamma), ll_expansion(s.gamma), residual, static_cast<long long>(s.n_nodes)};
    }
    if (spec.kind == "kappa") {
        const SymmetryMap m = map_symmetry(Symmetry::anyon(x), spec.coupling, spec.base);
        const ScatteringResult r =
            solve_scattering(m.effective, Channel::Even, m.effective.range() > 0 ? 2.0 * m.effective.range() : 1.0);
        return {x, spec.coupling, m.effective_coupling, r.scattering_length.value_or(std::nan(""))};
    }
    const ExpansionReport r = validate(spec.particles, spec.length, spec.base, spec.symmetry, x);
    return {x,
            r.scattering_length,
            r.bounds.leading,
            r.bounds.expansion,
            r.bounds.lower,
            r.bounds.upper,
            std::string(r.verdict ? "pass" : "fail")};
}

}  // namespace

Table run_sweep(const SweepSpec& spec) {
    Table t;
    t.columns = columns_for(spec.kind);
    const std::size_t n = spec.values.size();
    std::vector<std::vector<Cell>> rows(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                rows[i] = run_point(spec, spec.values[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int threads = std::max(1, std::min<int>(spec.threads, static_cast<int>(n)));
    std::vector<std::thread> pool;
    for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    t.rows = std::move(rows);
    return t;
}

std::string sweep_file_name(const SweepSpec& spec, const std::string& format) {
    columns_for(spec.kind);
    if (format != "csv" && format != "json") throw InvalidParameter("format must be csv or json");
    return "sweep_" + spec.kind + "." + format;
}

}  // namespace dilute1d
