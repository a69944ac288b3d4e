#include "lgbdf/scheme.hpp"

#include <cmath>
#include <stdexcept>

#include "lgbdf/parallel.hpp"

namespace lgbdf {

BdfCoefficients bdf_coefficients(int q) {
    if (q < 1 || q > max_bdf_order)
        throw std::invalid_argument("bdf_coefficients: order must be in 1..5");
    BdfCoefficients c;
    c.q = q;
    switch (q) {
        case 1: c.alpha = {1.0, -1.0}; break;
        case 2: c.alpha = {3.0 / 2.0, -2.0, 1.0 / 2.0}; break;
        case 3: c.alpha = {11.0 / 6.0, -3.0, 3.0 / 2.0, -1.0 / 3.0}; break;
        case 4: c.alpha = {25.0 / 12.0, -4.0, 3.0, -4.0 / 3.0, 1.0 / 4.0}; break;
        case 5: c.alpha = {137.0 / 60.0, -5.0, 5.0, -10.0 / 3.0, 5.0 / 4.0, -1.0 / 5.0}; break;
    }
    return c;
}

void SchemeConfig::validate() const {
    if (q < 1 || q > max_bdf_order) throw std::invalid_argument("scheme: q must be in 1..5");
    if (!(dt > 0.0)) throw std::invalid_argument("scheme: dt must be positive");
    if (mu < 0.0) throw std::invalid_argument("scheme: mu must be nonnegative");
    if (a0 < 0.0) throw std::invalid_argument("scheme: a0 must be nonnegative");
    if (time_quad_points < 1 || time_quad_points > 5)
        throw std::invalid_argument("scheme: time quadrature points must be in 1..5");
    if (tracing.substeps_per_dt < 1) throw std::invalid_argument("scheme: tracing substeps >= 1");
}

void History::push(ScalarField field, double t) {
    const int s = count % q;
    fields[s] = std::move(field);
    times[s] = t;
    ++count;
}

int History::slot(int steps_back) const {
    if (steps_back < 0 || steps_back >= std::min(count, q))
        throw std::out_of_range("History: level not available");
    return (count - 1 - steps_back) % q;
}

const ScalarField& History::level(int steps_back) const { return fields[slot(steps_back)]; }
double History::time(int steps_back) const { return times[slot(steps_back)]; }

namespace {

std::vector<double> nodal_source(const LagrangeSpace& space, const SpaceTimeFn& f, double t) {
    std::vector<double> v(space.ndof, 0.0);
    if (!f) return v;
    for (int i = 0; i < space.ndof; ++i) v[i] = f(space.dof_coords[i], t);
    return v;
}

// Startup integration of M dc/dt = -(C(t) + A) c + M f on [t, t+h] with an
// explicit Runge-Kutta scheme of the requested order (1, 2, 3, or 4).
class StartupOde {
 public:
    StartupOde(const LagrangeSpace& space, const TransportProblem& problem,
               const SchemeConfig& config)
        : space_(space), problem_(problem), config_(config),
          quad_degree_(config.effective_quad_degree(space.degree)),
          mass_(assemble_mass(space, quad_degree_)) {
        const SparseOperator k = assemble_stiffness(space, quad_degree_);
        bilinear_ = combine(config.mu, k, config.a0, mass_);
    }

    std::vector<double> derivative(const std::vector<double>& c, double t) const {
        const SparseOperator conv =
            assemble_convection(space_, problem_.velocity, t, quad_degree_);
        std::vector<double> rhs = combine(1.0, conv, 1.0, bilinear_).matvec(c);
        for (double& v : rhs) v = -v;
        if (problem_.source) {
            const std::vector<double> fm = mass_.matvec(nodal_source(space_, problem_.source, t));
            for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += fm[i];
        }
        std::vector<double> k(space_.ndof, 0.0);
        SolverConfig cfg = config_.solver;
        cfg.rel_tol = std::min(cfg.rel_tol, 1e-12);
        cg_solve(mass_, rhs, k, cfg);
        return k;
    }

    void rk_substep(std::vector<double>& c, double t, double h, int order) const {
        auto axpy = [&](const std::vector<double>& base, double s, const std::vector<double>& d) {
            std::vector<double> out(base);
            for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * d[i];
            return out;
        };
        if (order <= 1) {
            const auto k1 = derivative(c, t);
            c = axpy(c, h, k1);
        } else if (order == 2) {
            const auto k1 = derivative(c, t);
            const auto k2 = derivative(axpy(c, 0.5 * h, k1), t + 0.5 * h);
            c = axpy(c, h, k2);
        } else if (order == 3) {
            const auto k1 = derivative(c, t);
            const auto k2 = derivative(axpy(c, 0.5 * h, k1), t + 0.5 * h);
            auto mid = axpy(c, -h, k1);
            mid = axpy(mid, 2.0 * h, k2);
            const auto k3 = derivative(mid, t + h);
            for (std::size_t i = 0; i < c.size(); ++i)
                c[i] += h / 6.0 * (k1[i] + 4.0 * k2[i] + k3[i]);
        } else {
            const auto k1 = derivative(c, t);
            const auto k2 = derivative(axpy(c, 0.5 * h, k1), t + 0.5 * h);
            const auto k3 = derivative(axpy(c, 0.5 * h, k2), t + 0.5 * h);
            const auto k4 = derivative(axpy(c, h, k3), t + h);
            for (std::size_t i = 0; i < c.size(); ++i)
                c[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
    }

 private:
    const LagrangeSpace& space_;
    const TransportProblem& problem_;
    const SchemeConfig& config_;
    int quad_degree_;
    SparseOperator mass_;
    SparseOperator bilinear_;
};

}  // namespace

History startup(const LagrangeSpace& space, const TransportProblem& problem,
                const SchemeConfig& config) {
    config.validate();
    if (!problem.initial) throw std::invalid_argument("startup: initial condition required");

    History history(config.q);
    const auto initial_fn = [&](Vec2 x, double) { return problem.initial(x); };
    history.push(interpolate(space, initial_fn, problem.t0), problem.t0);
    if (config.q == 1) return history;

    if (config.startup_mode == StartupMode::exact) {
        if (!problem.exact)
            throw std::invalid_argument("startup: exact mode needs an analytic solution");
        for (int j = 1; j < config.q; ++j) {
            const double t = problem.t0 + j * config.dt;
            history.push(interpolate(space, problem.exact, t), t);
        }
        return history;
    }

    const int order = std::min(config.q - 1, 4);
    const StartupOde ode(space, problem, config);
    std::vector<double> c = history.level(0).coeff;
    for (int j = 1; j < config.q; ++j) {
        const double t = problem.t0 + (j - 1) * config.dt;
        ode.rk_substep(c, t, 0.5 * config.dt, order);
        ode.rk_substep(c, t + 0.5 * config.dt, 0.5 * config.dt, order);
        ScalarField field(space);
        field.coeff = c;
        history.push(std::move(field), problem.t0 + j * config.dt);
    }
    return history;
}

Operators build_operators(const LagrangeSpace& space, const SchemeConfig& config) {
    config.validate();
    const int quad_degree = config.effective_quad_degree(space.degree);
    Operators ops;
    ops.mass = assemble_mass(space, quad_degree);
    const SparseOperator k = assemble_stiffness(space, quad_degree);
    ops.bilinear = combine(config.mu, k, config.a0, ops.mass);
    const double alpha0 = bdf_coefficients(config.q).alpha[0];
    ops.step_matrix = combine(alpha0, ops.mass, config.dt, ops.bilinear);
    return ops;
}

std::vector<double> transport_rhs(const LagrangeSpace& space, const History& history,
                                  const std::vector<FeetData>& feet, const BdfCoefficients& alpha,
                                  Variant variant, const QuadratureRule& quad) {
    if (static_cast<int>(feet.size()) != alpha.q)
        throw std::invalid_argument("transport_rhs: need one feet level per BDF step");
    for (int i = 1; i <= alpha.q; ++i) {
        const FeetData& f = feet[i - 1];
        if (f.steps_back != i) throw std::invalid_argument("transport_rhs: feet out of order");
        const double t_level = history.time(i - 1);
        if (std::abs(f.time - t_level) > 1e-9 * std::max(1.0, std::abs(t_level)))
            throw std::invalid_argument("transport_rhs: feet level does not match history");
    }

    const Mesh& mesh = *space.mesh;
    const int ne = mesh.num_elements();
    const int nloc = space.nloc;
    const BasisTable tab = tabulate_basis(space.degree, quad);

    std::vector<double> local(static_cast<std::size_t>(ne) * nloc, 0.0);
    parallel_for(0, static_cast<std::size_t>(ne), [&](std::size_t l) {
        double* lv = &local[l * nloc];
        double host_phi[max_local_nodes];
        for (int i = 1; i <= alpha.q; ++i) {
            const FeetData& f = feet[i - 1];
            const ScalarField& past = history.level(i - 1);
            const double a = alpha.alpha[i];
            for (int g = 0; g < f.nq; ++g) {
                const std::size_t idx = l * f.nq + g;
                const PointLocation& host = f.host[idx];
                lagrange_basis(space.degree, host.ref, host_phi);
                double value = 0.0;
                for (int j = 0; j < nloc; ++j)
                    value += past.coeff[space.dof(host.element, j)] * host_phi[j];
                const double jac = variant == Variant::conservative ? f.jacobian[idx] : 1.0;
                const double w = -a * quad.weights[g] * mesh.map_det[l] * jac * value;
                const double* phi = tab.values_at(g);
                for (int j = 0; j < nloc; ++j) lv[j] += w * phi[j];
            }
        }
    });

    std::vector<double> rhs(space.ndof, 0.0);
    for (int l = 0; l < ne; ++l)
        for (int j = 0; j < nloc; ++j) rhs[space.dof(l, j)] += local[static_cast<std::size_t>(l) * nloc + j];
    return rhs;
}

StepStats step(const LagrangeSpace& space, History& history, const SchemeConfig& config,
               const Operators& ops, const VelocityField& velocity, const SpaceTimeFn& source,
               double t_n, std::vector<double>& warm) {
    if (!history.full()) throw std::invalid_argument("step: history must hold q levels");
    const BdfCoefficients alpha = bdf_coefficients(config.q);
    const QuadratureRule& quad = simplex_quadrature(config.effective_quad_degree(space.degree));
    const bool with_jacobian = config.variant == Variant::conservative;
    if (with_jacobian && !velocity.divergence)
        throw std::invalid_argument("step: conservative variant needs the divergence callback");

    const std::vector<double> levels =
        step_level_times(t_n, config.dt, config.q, config.time_quad_points);
    const NodeTrajectories traj =
        trace_nodes(space, t_n, levels, config.dt, velocity, config.tracing);

    std::vector<FeetData> feet;
    feet.reserve(config.q);
    long feet_clamps = 0;
    for (int i = 1; i <= config.q; ++i) {
        feet.push_back(build_feet_data(space, traj, velocity, quad, i, config.time_quad_points,
                                       with_jacobian));
        feet_clamps += feet.back().clamp_count;
    }

    std::vector<double> rhs = transport_rhs(space, history, feet, alpha, config.variant, quad);
    if (source) {
        const std::vector<double> load =
            assemble_load(space, source, t_n, config.effective_quad_degree(space.degree));
        for (int i = 0; i < space.ndof; ++i) rhs[i] += config.dt * load[i];
    }

    const SolveStats stats = cg_solve(ops.step_matrix, rhs, warm, config.solver);
    ScalarField field(space);
    field.coeff = warm;
    history.push(std::move(field), t_n);
    return {stats.iterations, stats.residual, traj.clamp_count, feet_clamps};
}

RunResult run(const LagrangeSpace& space, const TransportProblem& problem,
              const SchemeConfig& config, double T, const LevelObserver& observer) {
    config.validate();
    const int nsteps = static_cast<int>(std::floor(T / config.dt + 1e-9));
    if (nsteps < config.q)
        throw std::invalid_argument("run: need at least q steps in [t0, T]");

    RunResult result;
    const int quad_degree = config.effective_quad_degree(space.degree);
    History history = startup(space, problem, config);

    auto record = [&](int n, double t, const ScalarField& field, const StepStats& stats) {
        LevelRecord rec;
        rec.n = n;
        rec.t = t;
        rec.mass = integrate_field(space, field, quad_degree);
        rec.cg_iterations = stats.cg_iterations;
        rec.cg_residual = stats.cg_residual;
        rec.trace_clamps = stats.trace_clamps;
        rec.feet_clamps = stats.feet_clamps;
        result.levels.push_back(rec);
        if (observer) observer(rec, field);
    };

    for (int j = 0; j < config.q; ++j)
        record(j, history.time(config.q - 1 - j), history.level(config.q - 1 - j), StepStats{});

    const Operators ops = build_operators(space, config);
    std::vector<double> warm = history.level(0).coeff;
    for (int n = config.q; n <= nsteps; ++n) {
        const double t_n = problem.t0 + n * config.dt;
        const StepStats stats = step(space, history, config, ops, problem.velocity, problem.source,
                                     t_n, warm);
        record(n, t_n, history.level(0), stats);
    }
    result.final_field = history.level(0);
    return result;
}

}  // namespace lgbdf
