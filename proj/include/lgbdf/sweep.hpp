#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lgbdf/metrics.hpp"
#include "lgbdf/problems.hpp"

namespace lgbdf {

struct CaseSpec {
    int n = 16;
    int k = 1;
    int q = 1;
    double dt = 0.1;
    Variant variant = Variant::conservative;
};

struct CaseResult {
    CaseSpec spec;
    bool failed = false;
    std::string error;
    double e_l2 = 0.0;
    double e_m = 0.0;
    double eh_l2 = 0.0;
    double eh_m = 0.0;
    double final_time = 0.0;
    double mass_drift = 0.0;  // |mass(final) - mass(level q-1)|
    double runtime_s = 0.0;
};

struct SweepConfig {
    double mu = 0.01;
    double a0 = 0.0;
    double T = 0.0;  // 0 selects the problem's horizon
    StartupMode startup = StartupMode::exact;
    DiagonalSplit split = DiagonalSplit::lower_left;
    int quad_degree = 0;  // 0 selects 2k+2
    int time_quad_points = 3;
    int rk_substeps = 4;
    double cg_tol = 1e-12;
    std::vector<CaseSpec> grid;  // variant field ignored; crossed with variants
    std::vector<Variant> variants{Variant::conservative};
};

// Full simulation of one configuration with all four error measures.
CaseResult run_case(const ManufacturedProblem& problem, const CaseSpec& spec,
                    const SweepConfig& config);

struct ConvergenceTable {
    std::vector<CaseResult> rows;
};

// Runs grid x variants (variant-major order); per-row failures are recorded
// and the sweep continues.
ConvergenceTable convergence_sweep(const ManufacturedProblem& problem, const SweepConfig& config);

// Observed order between two rows of one refinement family, from the dt
// ratio when it changes, otherwise from the N ratio; NaN when neither moves.
double observed_order(const CaseResult& coarse, const CaseResult& fine, double CaseResult::*err);

void write_sweep_csv(std::ostream& out, const ConvergenceTable& table,
                     const std::vector<std::string>& header_comments);

std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);

}  // namespace lgbdf
