#pragma once

#include "lgbdf/problems.hpp"
#include "lgbdf/space.hpp"

namespace lgbdf {

// Final-time relative errors against the analytic solution, integrated with
// a rule of the given degree evaluating c(x, t) at the physical points:
//   e_l2 = sqrt( int (c_h - c)^2 / int c^2 ),  e_m = |int (c_h - c)| / int c.
double error_l2_final(const ScalarField& field, const ManufacturedProblem& problem, double t,
                      int quad_degree);
double error_mass_final(const ScalarField& field, const ManufacturedProblem& problem, double t,
                        int quad_degree);

// Run-wide relative errors measured against the degree-k interpolant of the
// analytic solution rather than the solution itself:
//   eh_l2 = max_n ||c_h^n - I_h c^n|| / max_n ||I_h c^n||,
//   eh_m  = |int (c_h^N - I_h c^N)| / |int I_h c^N|   (final level only).
// Feed every level in order via observe(); totals are streamed maxima.
class RTErrorTracker {
 public:
    RTErrorTracker(const ManufacturedProblem& problem, int quad_degree)
        : problem_(problem), quad_degree_(quad_degree) {}

    void observe(const ScalarField& field, double t);

    double eh_l2() const;
    double eh_m() const;
    int levels_seen() const { return levels_; }

 private:
    const ManufacturedProblem& problem_;
    int quad_degree_;
    int levels_ = 0;
    double max_diff_ = 0.0;      // max_n int (c_h - I_h c)^2
    double max_interp_ = 0.0;    // max_n int (I_h c)^2
    double last_diff_mass_ = 0.0;
    double last_interp_mass_ = 0.0;
};

// Both RT errors for an already-recorded trajectory.
struct RunTrajectory {
    std::vector<ScalarField> fields;
    std::vector<double> times;
};
std::pair<double, double> relative_errors_rt(const RunTrajectory& trajectory,
                                             const ManufacturedProblem& problem, int quad_degree);

}  // namespace lgbdf
