#include "lgbdf/characteristics.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "lgbdf/parallel.hpp"

namespace lgbdf {

int NodeTrajectories::level_index(double t, double tol) const {
    for (std::size_t i = 0; i < level_times.size(); ++i)
        if (std::abs(level_times[i] - t) <= tol) return static_cast<int>(i);
    throw std::invalid_argument("NodeTrajectories: time level not recorded");
}

namespace {

Vec2 eval_velocity(const VelocityField& velocity, Vec2 x, double t) {
    const Vec2 u = velocity.value(x, t);
    if (!finite(u)) throw std::invalid_argument("trace_nodes: velocity returned non-finite value");
    return u;
}

// One classical RK4 step of dX/ds = u(X,s) from time t with (negative) step h.
Vec2 rk4_step(const VelocityField& velocity, Vec2 x, double t, double h) {
    const Vec2 k1 = eval_velocity(velocity, x, t);
    const Vec2 k2 = eval_velocity(velocity, x + 0.5 * h * k1, t + 0.5 * h);
    const Vec2 k3 = eval_velocity(velocity, x + 0.5 * h * k2, t + 0.5 * h);
    const Vec2 k4 = eval_velocity(velocity, x + h * k3, t + h);
    return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

std::vector<double> step_level_times(double t_base, double dt, int q, int time_quad_points) {
    const GaussRule01& gauss = gauss_legendre_01(time_quad_points);
    std::vector<double> levels;
    levels.reserve(static_cast<std::size_t>(q) * (time_quad_points + 1));
    for (int i = 1; i <= q; ++i) {
        const double hi = t_base - (i - 1) * dt;
        // Gauss nodes of [t_base - i*dt, hi], descending, then the step level.
        for (int m = time_quad_points - 1; m >= 0; --m)
            levels.push_back(hi - dt * (1.0 - gauss.nodes[m]));
        levels.push_back(t_base - i * dt);
    }
    return levels;
}

NodeTrajectories trace_nodes(const LagrangeSpace& space, double t_base,
                             const std::vector<double>& level_times, double dt,
                             const VelocityField& velocity, const RKConfig& rk) {
    if (!velocity.value) throw std::invalid_argument("trace_nodes: velocity callback required");
    if (rk.substeps_per_dt < 1) throw std::invalid_argument("trace_nodes: substeps must be >= 1");
    if (!(dt > 0.0)) throw std::invalid_argument("trace_nodes: dt must be positive");
    for (std::size_t i = 0; i < level_times.size(); ++i) {
        const double t = level_times[i];
        const double prev = i == 0 ? t_base : level_times[i - 1];
        if (t > prev + 1e-14)
            throw std::invalid_argument("trace_nodes: level times must decrease from the base time");
    }

    NodeTrajectories traj;
    traj.base_time = t_base;
    traj.dt = dt;
    traj.level_times.push_back(t_base);
    for (double t : level_times)
        if (t < t_base - 1e-14) traj.level_times.push_back(t);

    const Mesh& mesh = *space.mesh;
    const std::size_t nn = space.dof_coords.size();
    const std::size_t nlev = traj.level_times.size();
    traj.positions.assign(nlev, std::vector<Vec2>(nn));
    traj.positions[0] = space.dof_coords;

    const double target_h = dt / rk.substeps_per_dt;
    std::vector<long> clamps(nn, 0);
    parallel_for(0, nn, [&](std::size_t node) {
        Vec2 x = space.dof_coords[node];
        double t = t_base;
        for (std::size_t lev = 1; lev < nlev; ++lev) {
            const double t_to = traj.level_times[lev];
            const double gap = t - t_to;
            const int nsub = std::max(1, static_cast<int>(std::ceil(gap / target_h - 1e-12)));
            const double h = -gap / nsub;
            for (int s = 0; s < nsub; ++s) x = rk4_step(velocity, x, t + s * h, h);
            t = t_to;
            bool moved = false;
            const Vec2 recorded = project_into_domain(mesh, x, &moved);
            if (moved) ++clamps[node];
            traj.positions[lev][node] = recorded;
        }
    });
    for (long c : clamps) traj.clamp_count += c;
    return traj;
}

Vec2 interpolated_foot(const LagrangeSpace& space, const NodeTrajectories& traj, int level,
                       int element, Vec2 ref) {
    double phi[max_local_nodes];
    lagrange_basis(space.degree, ref, phi);
    const std::vector<Vec2>& pos = traj.positions[level];
    Vec2 foot{0.0, 0.0};
    for (int j = 0; j < space.nloc; ++j) foot += phi[j] * pos[space.dof(element, j)];
    return foot;
}

double jacobian_tilde(const LagrangeSpace& space, const NodeTrajectories& traj,
                      const VelocityField& velocity, int element, Vec2 ref, int steps_back,
                      int time_quad_points) {
    if (!velocity.divergence)
        throw std::invalid_argument("jacobian_tilde: divergence callback required");
    const GaussRule01& gauss = gauss_legendre_01(time_quad_points);
    const double dt = traj.dt;
    double integral = 0.0;
    for (int i = 1; i <= steps_back; ++i) {
        const double lo = traj.base_time - i * dt;
        for (int m = 0; m < time_quad_points; ++m) {
            const double s = lo + dt * gauss.nodes[m];
            const int lev = traj.level_index(s, 1e-10 * std::max(1.0, std::abs(s)));
            const Vec2 foot = interpolated_foot(space, traj, lev, element, ref);
            const double div_u = velocity.divergence(foot, s);
            if (!std::isfinite(div_u))
                throw std::invalid_argument("jacobian_tilde: non-finite divergence");
            integral += dt * gauss.weights[m] * div_u;
        }
    }
    return std::exp(-integral);
}

FeetData build_feet_data(const LagrangeSpace& space, const NodeTrajectories& traj,
                         const VelocityField& velocity, const QuadratureRule& quad,
                         int steps_back, int time_quad_points, bool with_jacobian) {
    FeetData feet;
    feet.steps_back = steps_back;
    feet.time = traj.base_time - steps_back * traj.dt;
    feet.nq = quad.size();
    const int level = traj.level_index(feet.time, 1e-10 * std::max(1.0, std::abs(feet.time)));

    const Mesh& mesh = *space.mesh;
    const int ne = mesh.num_elements();
    const std::size_t total = static_cast<std::size_t>(ne) * feet.nq;
    feet.foot.resize(total);
    feet.host.resize(total);
    feet.jacobian.assign(total, 1.0);

    std::vector<long> clamps(ne, 0);
    parallel_for(0, static_cast<std::size_t>(ne), [&](std::size_t l) {
        const int elem = static_cast<int>(l);
        int hint = elem;
        for (int g = 0; g < feet.nq; ++g) {
            const std::size_t idx = l * feet.nq + g;
            const Vec2 ref = quad.points[g];
            const Vec2 foot = interpolated_foot(space, traj, level, elem, ref);
            feet.foot[idx] = foot;
            const PointLocation loc = locate_point(mesh, foot, hint);
            feet.host[idx] = loc;
            hint = loc.element;
            if (loc.clamped) ++clamps[l];
            if (with_jacobian)
                feet.jacobian[idx] =
                    jacobian_tilde(space, traj, velocity, elem, ref, steps_back, time_quad_points);
        }
    });
    for (long c : clamps) feet.clamp_count += c;
    return feet;
}

void dump_feet_csv(const FeetData& feet, std::ostream& out) {
    out << "element,g,foot_x,foot_y,host,ref_x,ref_y,jacobian\n";
    out << std::setprecision(17);
    const std::size_t total = feet.foot.size();
    for (std::size_t idx = 0; idx < total; ++idx) {
        const std::size_t l = idx / feet.nq, g = idx % feet.nq;
        out << l << ',' << g << ',' << feet.foot[idx].x << ',' << feet.foot[idx].y << ','
            << feet.host[idx].element << ',' << feet.host[idx].ref.x << ',' << feet.host[idx].ref.y
            << ',' << feet.jacobian[idx] << '\n';
    }
}

}  // namespace lgbdf
