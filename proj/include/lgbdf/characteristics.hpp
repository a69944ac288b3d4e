#pragma once

#include <iosfwd>
#include <vector>

#include "lgbdf/quadrature.hpp"
#include "lgbdf/space.hpp"
#include "lgbdf/velocity.hpp"

namespace lgbdf {

struct RKConfig {
    int substeps_per_dt = 4;  // classical fourth-order steps per dt of backward tracing
};

// Backward-traced positions of every global dof node at a set of recorded
// time levels below the base time.  Recorded positions are projected into
// the closed domain; the integration itself marches unprojected so the
// recording never perturbs the trajectory.
struct NodeTrajectories {
    double base_time = 0.0;
    double dt = 0.0;
    std::vector<double> level_times;          // strictly decreasing, starts at base_time
    std::vector<std::vector<Vec2>> positions; // [level][node]
    long clamp_count = 0;

    int level_index(double t, double tol = 1e-12) const;
};

// Integrates dX/ds = u(X,s) backward from t_base through every level in
// level_times (strictly decreasing, first entry may be t_base itself).
// Fixed-step RK4 with substeps sized against dt / substeps_per_dt.
NodeTrajectories trace_nodes(const LagrangeSpace& space, double t_base,
                             const std::vector<double>& level_times, double dt,
                             const VelocityField& velocity, const RKConfig& rk);

// Isoparametric foot: degree-k interpolation of the traced node positions of
// one element, continuous across interior edges.
Vec2 interpolated_foot(const LagrangeSpace& space, const NodeTrajectories& traj, int level,
                       int element, Vec2 ref);

// Exponential Jacobian factor exp(-int_{t_level}^{t_base} div u(foot(s), s) ds),
// with the time integral evaluated by Gauss-Legendre of time_quad_points per
// dt interval; all sub-times must be recorded levels of traj.
double jacobian_tilde(const LagrangeSpace& space, const NodeTrajectories& traj,
                      const VelocityField& velocity, int element, Vec2 ref, int steps_back,
                      int time_quad_points);

// Transported quadrature data for one past level t_base - steps_back * dt.
struct FeetData {
    int steps_back = 0;
    double time = 0.0;
    int nq = 0;
    std::vector<Vec2> foot;            // element * nq + g
    std::vector<PointLocation> host;
    std::vector<double> jacobian;      // exponential factor; 1 when not computed
    long clamp_count = 0;              // feet projected onto the domain when locating
};

FeetData build_feet_data(const LagrangeSpace& space, const NodeTrajectories& traj,
                         const VelocityField& velocity, const QuadratureRule& quad,
                         int steps_back, int time_quad_points, bool with_jacobian);

void dump_feet_csv(const FeetData& feet, std::ostream& out);

// Recorded level times for a BDF step: for each interval i = 1..q the
// Gauss-Legendre sub-times followed by the step level t_base - i*dt.
std::vector<double> step_level_times(double t_base, double dt, int q, int time_quad_points);

}  // namespace lgbdf
