#include "lgbdf/sweep.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace lgbdf {

std::string variant_name(Variant v) {
    return v == Variant::conservative ? "conservative" : "nonconservative";
}

Variant variant_from_name(const std::string& name) {
    if (name == "conservative") return Variant::conservative;
    if (name == "nonconservative") return Variant::nonconservative;
    throw std::invalid_argument("unknown variant: " + name);
}

CaseResult run_case(const ManufacturedProblem& problem, const CaseSpec& spec,
                    const SweepConfig& config) {
    CaseResult result;
    result.spec = spec;
    const auto start = std::chrono::steady_clock::now();
    try {
        const Mesh mesh = build_uniform_square_mesh(problem.lo, problem.hi, spec.n, config.split);
        const LagrangeSpace space = build_space(mesh, spec.k);

        ManufacturedProblem p = problem;
        p.mu = config.mu;
        p.a0 = config.a0;

        SchemeConfig scheme;
        scheme.q = spec.q;
        scheme.dt = spec.dt;
        scheme.mu = config.mu;
        scheme.a0 = config.a0;
        scheme.variant = spec.variant;
        scheme.startup_mode = config.startup;
        scheme.quad_degree = config.quad_degree;
        scheme.time_quad_points = config.time_quad_points;
        scheme.tracing.substeps_per_dt = config.rk_substeps;
        scheme.solver.rel_tol = config.cg_tol;

        const double horizon = config.T > 0.0 ? config.T : problem.T;
        const int quad_degree = scheme.effective_quad_degree(spec.k);

        RTErrorTracker tracker(p, quad_degree);
        double startup_mass = 0.0;
        const RunResult run_result = run(
            space, p.transport(), scheme, horizon,
            [&](const LevelRecord& rec, const ScalarField& field) {
                tracker.observe(field, rec.t);
                if (rec.n == spec.q - 1) startup_mass = rec.mass;
            });

        result.final_time = run_result.levels.back().t;
        result.e_l2 = error_l2_final(run_result.final_field, p, result.final_time, quad_degree);
        result.e_m = error_mass_final(run_result.final_field, p, result.final_time, quad_degree);
        result.eh_l2 = tracker.eh_l2();
        result.eh_m = tracker.eh_m();
        result.mass_drift = std::abs(run_result.levels.back().mass - startup_mass);
    } catch (const std::exception& e) {
        result.failed = true;
        result.error = e.what();
        result.e_l2 = result.e_m = result.eh_l2 = result.eh_m =
            std::numeric_limits<double>::quiet_NaN();
    }
    result.runtime_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

ConvergenceTable convergence_sweep(const ManufacturedProblem& problem, const SweepConfig& config) {
    if (config.grid.empty()) throw std::invalid_argument("convergence_sweep: empty grid");
    if (config.variants.empty()) throw std::invalid_argument("convergence_sweep: empty variant list");
    ConvergenceTable table;
    for (const Variant v : config.variants) {
        for (const CaseSpec& g : config.grid) {
            CaseSpec spec = g;
            spec.variant = v;
            table.rows.push_back(run_case(problem, spec, config));
        }
    }
    return table;
}

double observed_order(const CaseResult& coarse, const CaseResult& fine, double CaseResult::*err) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (coarse.failed || fine.failed) return nan;
    if (coarse.spec.k != fine.spec.k || coarse.spec.q != fine.spec.q ||
        coarse.spec.variant != fine.spec.variant)
        return nan;
    const double e0 = coarse.*err, e1 = fine.*err;
    if (!(e0 > 0.0) || !(e1 > 0.0)) return nan;
    const double dt_ratio = coarse.spec.dt / fine.spec.dt;
    const double n_ratio = static_cast<double>(fine.spec.n) / coarse.spec.n;
    if (dt_ratio > 1.0 + 1e-12) return std::log(e0 / e1) / std::log(dt_ratio);
    if (n_ratio > 1.0 + 1e-12) return std::log(e0 / e1) / std::log(n_ratio);
    return nan;
}

void write_sweep_csv(std::ostream& out, const ConvergenceTable& table,
                     const std::vector<std::string>& header_comments) {
    for (const auto& line : header_comments) out << "# " << line << '\n';
    out << "N,k,q,dt,variant,e_L2,e_m,eh_L2,eh_m,order_L2,runtime_s\n";
    out << std::setprecision(12);
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const CaseResult& r = table.rows[i];
        out << r.spec.n << ',' << r.spec.k << ',' << r.spec.q << ',' << r.spec.dt << ','
            << variant_name(r.spec.variant) << ',';
        if (r.failed) {
            out << "nan,nan,nan,nan,,";
            out << std::setprecision(3) << r.runtime_s << std::setprecision(12);
            out << '\n';
            continue;
        }
        out << r.e_l2 << ',' << r.e_m << ',' << r.eh_l2 << ',' << r.eh_m << ',';
        if (i > 0) {
            const double order = observed_order(table.rows[i - 1], r, &CaseResult::e_l2);
            if (std::isfinite(order)) out << std::setprecision(4) << order << std::setprecision(12);
        }
        out << ',' << std::setprecision(3) << r.runtime_s << std::setprecision(12) << '\n';
    }
}

}  // namespace lgbdf
