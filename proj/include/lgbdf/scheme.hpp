#pragma once

#include <array>
#include <functional>
#include <vector>

#include "lgbdf/assembly.hpp"
#include "lgbdf/characteristics.hpp"
#include "lgbdf/solver.hpp"
#include "lgbdf/space.hpp"
#include "lgbdf/velocity.hpp"

namespace lgbdf {

enum class Variant {
    conservative,     // transported terms carry the flow Jacobian factor
    nonconservative,  // same transported evaluation with unit Jacobian
};

enum class StartupMode { exact, rk };

inline constexpr int max_bdf_order = 5;

struct BdfCoefficients {
    int q = 0;
    std::array<double, max_bdf_order + 1> alpha{};  // alpha[0..q]
};

BdfCoefficients bdf_coefficients(int q);

struct SchemeConfig {
    int q = 1;
    double dt = 0.0;
    double mu = 1.0;
    double a0 = 0.0;
    Variant variant = Variant::conservative;
    StartupMode startup_mode = StartupMode::exact;
    int quad_degree = 0;  // 0 selects 2k+2
    int time_quad_points = 3;
    RKConfig tracing;
    SolverConfig solver;

    void validate() const;
    int effective_quad_degree(int k) const { return quad_degree > 0 ? quad_degree : 2 * k + 2; }
};

// Transport problem data; exact/source may be empty (source empty means 0).
struct TransportProblem {
    VelocityField velocity;
    std::function<double(Vec2)> initial;
    SpaceTimeFn exact;
    SpaceTimeFn source;
    double t0 = 0.0;
};

// Ring buffer of the last q accepted fields; level(0) is the newest.
struct History {
    explicit History(int q_) : q(q_), fields(q_), times(q_, 0.0) {}
    int q;
    std::vector<ScalarField> fields;
    std::vector<double> times;
    int count = 0;

    bool full() const { return count >= q; }
    void push(ScalarField field, double t);
    const ScalarField& level(int steps_back) const;
    double time(int steps_back) const;

 private:
    int slot(int steps_back) const;
};

History startup(const LagrangeSpace& space, const TransportProblem& problem,
                const SchemeConfig& config);

// Discrete operators shared by every step: mass M, bilinear A = mu K + a0 M,
// and the step matrix alpha0 M + dt A.
struct Operators {
    SparseOperator mass;
    SparseOperator bilinear;
    SparseOperator step_matrix;
};

Operators build_operators(const LagrangeSpace& space, const SchemeConfig& config);

// Right-hand side sum over past levels: entry j accumulates
// -alpha_i * w_g * det_l * J_i(l,g) * c^{n-i}(foot host) * chi_j(l, g).
std::vector<double> transport_rhs(const LagrangeSpace& space, const History& history,
                                  const std::vector<FeetData>& feet, const BdfCoefficients& alpha,
                                  Variant variant, const QuadratureRule& quad);

struct StepStats {
    int cg_iterations = 0;
    double cg_residual = 0.0;
    long trace_clamps = 0;
    long feet_clamps = 0;
};

// Advances the history (holding q levels ending at t_n - dt) to t_n.
StepStats step(const LagrangeSpace& space, History& history, const SchemeConfig& config,
               const Operators& ops, const VelocityField& velocity, const SpaceTimeFn& source,
               double t_n, std::vector<double>& warm);

struct LevelRecord {
    int n = 0;
    double t = 0.0;
    double mass = 0.0;
    int cg_iterations = 0;
    double cg_residual = 0.0;
    long trace_clamps = 0;
    long feet_clamps = 0;
};

using LevelObserver = std::function<void(const LevelRecord&, const ScalarField&)>;

struct RunResult {
    ScalarField final_field;
    std::vector<LevelRecord> levels;  // startup levels 0..q-1 followed by steps
};

// Startup then steps n = q..floor(T/dt); the observer sees every level.
RunResult run(const LagrangeSpace& space, const TransportProblem& problem,
              const SchemeConfig& config, double T, const LevelObserver& observer = {});

}  // namespace lgbdf
